#include <random>
#include <set>

#include "doctest.h"

#include "ctam/amalgam.hpp"
#include "ctam/classifier.hpp"
#include "ctam/error.hpp"

using namespace ctam;

namespace {

Diagram data(const std::string& name) { return load_diagram(std::string(CTAM_TEST_DATA) + "/" + name); }

int orientable_count(const std::vector<IsoClass>& classes) {
  int n = 0;
  for (const auto& c : classes) n += c.orientable ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("class counts") {
  const Field F4 = Field::make(2, 2), F8 = Field::make(2, 3);
  for (const Field& F : {F4, F8, Field::make(5, 1), Field::make(3, 2)}) {
    const auto tree = enumerate_classes(data("a4.dgm"), F);
    CHECK(tree.size() == 1);
    CHECK(tree[0].orientable);
    CHECK(tree[0].canonical.trivial());
  }
  const auto c4 = enumerate_classes(data("c4.dgm"), F4);
  CHECK(c4.size() == 4);
  CHECK(orientable_count(c4) == 2);
  const auto theta = enumerate_classes(data("theta.dgm"), F8);
  CHECK(theta.size() == 36);
  CHECK(orientable_count(theta) == 9);

  // Keys are distinct and in lexicographic order.
  std::vector<std::string> keys;
  for (const auto& c : theta) keys.push_back(class_key(c.phi));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
  CHECK(class_key(c4[1].phi) == "(0,1)");

  // Each canonical pointing reproduces its class and is supported on H only.
  const auto sd = spanning_structure(data("theta.dgm"));
  const CoordGroup G(F8);
  for (const auto& c : theta) {
    CHECK(phi_of_pointing(G, c.canonical, sd) == c.phi);
    for (const auto& [e, v] : c.canonical.values())
      CHECK(std::find(sd.extra.begin(), sd.extra.end(), e) != sd.extra.end());
    CHECK(c.orientable == is_orientable_phi(c.phi));
  }
  CHECK_THROWS_AS(enumerate_classes(data("c4.dgm"), Field::make(3, 1)), DomainError);
  CHECK_THROWS_AS(enumerate_classes(data("triangle.dgm"), F4), DomainError);
}

TEST_CASE("orientability of a class") {
  CHECK(is_orientable_phi(std::vector<ACoord>{}));
  CHECK(is_orientable_phi(std::vector<ACoord>{{0, 0}}));
  CHECK_FALSE(is_orientable_phi(std::vector<ACoord>{{1, 0}}));
  CHECK(is_orientable_phi(std::vector<ACoord>{{0, 1}}));
  CHECK_FALSE(is_orientable_phi(std::vector<ACoord>{{0, 1}, {1, 1}}));
}

TEST_CASE("isomorphism of pointings through the invariant") {
  const Field F = Field::make(2, 2);
  const CoordGroup G(F);
  const Diagram d = data("c4.dgm");
  const auto sd = spanning_structure(d);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Pointing delta = random_pointing(G, d, rng);
    const auto phi = phi_of_pointing(G, delta, sd);
    CHECK(pointings_isomorphic(G, delta, canonical_pointing(sd, phi), sd));
    const std::vector<ACoord> target{G.elements()[rng() % G.size()]};
    const Pointing moved = with_phi(G, delta, sd, target);
    CHECK(phi_of_pointing(G, moved, sd) == target);
  }
  // The same value on both directions of a tree edge cancels in every cycle;
  // a value on one direction only is a different class.
  Pointing on_tree;
  on_tree.set(sd.tree[1], ACoord{1, 1});
  on_tree.set(sd.tree[1].reversed(), ACoord{1, 1});
  CHECK(pointings_isomorphic(G, Pointing{}, on_tree, sd));
  CHECK(oracle_pointing_iso(G, d, Pointing{}, on_tree).has_value());
  Pointing one_way;
  one_way.set(sd.tree[1], ACoord{1, 1});
  CHECK_FALSE(pointings_isomorphic(G, Pointing{}, one_way, sd));
  CHECK_FALSE(oracle_pointing_iso(G, d, Pointing{}, one_way).has_value());
  CHECK_FALSE(pointings_isomorphic(G, canonical_pointing(sd, {{1, 0}}), canonical_pointing(sd, {{0, 1}}), sd));
}

TEST_CASE("brute-force pointing isomorphism") {
  const Field F = Field::make(2, 2);
  const CoordGroup G(F);
  const Diagram d = data("c4.dgm");
  const auto sd = spanning_structure(d);
  std::mt19937_64 rng(9);

  const Pointing delta = random_pointing(G, d, rng);
  const auto self = oracle_pointing_iso(G, d, delta, delta);
  REQUIRE(self.has_value());
  for (ACoord a : self->vertex) CHECK(a == ACoord{});

  // Same invariant, different support.
  const Pointing p1 = canonical_pointing(sd, {{1, 1}});
  Pointing p2;
  p2.set({0, 1}, ACoord{1, 0});
  p2.set({2, 1}, ACoord{0, 1});
  p2.set({3, 0}, ACoord{1, 1});
  p2 = with_phi(G, p2, sd, {{1, 1}});
  REQUIRE(p1 != p2);
  const auto w = oracle_pointing_iso(G, d, p1, p2);
  REQUIRE(w.has_value());
  CHECK(verify_iso_witness(G, d, p1, p2, *w));

  SearchStats stats;
  CHECK_FALSE(oracle_pointing_iso(G, d, canonical_pointing(sd, {{0, 0}}), canonical_pointing(sd, {{1, 0}}), &stats)
                  .has_value());
  CHECK(stats.nodes > 0);
  CHECK_THROWS_AS(oracle_pointing_iso(G, d, canonical_pointing(sd, {{0, 0}}), canonical_pointing(sd, {{1, 0}}),
                                      nullptr, 10),
                  BudgetExceeded);

  // Agreement with the invariant on random pairs, half of them forced equal.
  for (int k = 0; k < 200; ++k) {
    const Pointing a = random_pointing(G, d, rng);
    Pointing b = random_pointing(G, d, rng);
    if (k % 2 == 0) b = with_phi(G, b, sd, phi_of_pointing(G, a, sd));
    const auto found = oracle_pointing_iso(G, d, a, b);
    CHECK(found.has_value() == pointings_isomorphic(G, a, b, sd));
    if (found) CHECK(verify_iso_witness(G, d, a, b, *found));
  }

  // A corrupted witness is rejected.
  IsoWitness bad = *w;
  bad.vertex[2] = G.add(bad.vertex[2], ACoord{1, 0});
  CHECK_FALSE(verify_iso_witness(G, d, p1, p2, bad));
}

TEST_CASE("matrix-level isomorphism search") {
  const Field F = Field::make(2, 2);
  const CoordGroup G(F);
  const Diagram d = data("c4.dgm");
  const auto sd = spanning_structure(d);
  std::mt19937_64 rng(21);

  const auto A = build_amalgam(d, random_pointing(G, d, rng), F);
  const auto self = oracle_matrix_iso(A, A);
  REQUIRE(self.has_value());
  CHECK(verify_matrix_witness(A, A, *self));

  for (int k = 0; k < 6; ++k) {
    const Pointing d1 = random_pointing(G, d, rng);
    const Pointing d2 = with_phi(G, random_pointing(G, d, rng), sd, phi_of_pointing(G, d1, sd));
    const auto A1 = build_amalgam(d, d1, F);
    const auto A2 = build_amalgam(d, d2, F);
    const auto w = oracle_matrix_iso(A1, A2);
    REQUIRE(w.has_value());
    CHECK(verify_matrix_witness(A1, A2, *w));
    CHECK(verify_iso_witness(G, d, d2, d1, project(*w)));
  }

  const auto B1 = build_amalgam(d, canonical_pointing(sd, {{0, 0}}), F);
  const auto B2 = build_amalgam(d, canonical_pointing(sd, {{0, 1}}), F);
  CHECK_FALSE(oracle_matrix_iso(B1, B2).has_value());
  CHECK_THROWS_AS(oracle_matrix_iso(B1, build_amalgam(d, Pointing{}, Field::make(2, 3))), DomainError);
}

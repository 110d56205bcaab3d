#include <random>

#include "doctest.h"

#include "ctam/error.hpp"
#include "ctam/path_group.hpp"

using namespace ctam;

namespace {

Diagram data(const std::string& name) { return load_diagram(std::string(CTAM_TEST_DATA) + "/" + name); }

ACoord random_coord(const CoordGroup& G, std::mt19937_64& rng) {
  const auto els = G.elements();
  return els[rng() % els.size()];
}

GroupPath random_path(const CoordGroup& G, const Diagram& d, int start, int length, std::mt19937_64& rng) {
  GroupPath p;
  p.start = start;
  p.letters.push_back(random_coord(G, rng));
  int v = start;
  for (int k = 0; k < length; ++k) {
    const auto nb = d.neighbors(v);
    const int w = nb[rng() % nb.size()];
    p.edges.push_back({v, w});
    p.letters.push_back(random_coord(G, rng));
    v = w;
  }
  return p;
}

GroupPath plain(int start, const std::vector<DirectedEdge>& edges) {
  GroupPath p;
  p.start = start;
  p.edges = edges;
  p.letters.assign(edges.size() + 1, ACoord{});
  return p;
}

}  // namespace

TEST_CASE("coordinate group") {
  const CoordGroup G(3);
  CHECK(G.size() == 6);
  CHECK(G.elements().size() == 6);
  for (ACoord a : G.elements()) {
    CHECK(G.add(a, G.neg(a)) == ACoord{});
    CHECK(G.elements()[G.ordinal(a)] == a);
    for (ACoord b : G.elements()) CHECK(G.add(a, b) == G.add(b, a));
  }
  CHECK(format(ACoord{1, 2}) == "(1,2)");
  CHECK_THROWS_AS(G.checked(2, 0), InputError);
  CHECK_THROWS_AS(G.checked(0, 3), InputError);
}

TEST_CASE("restriction maps are the identity in coordinates") {
  CHECK(alpha({0, 1}, ACoord{1, 1}) == ACoord{1, 1});
  CHECK(alpha({1, 0}, ACoord{}) == ACoord{});
  CHECK(alpha_inverse({0, 1}, ACoord{0, 1}) == ACoord{0, 1});
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}})
    CHECK(alpha_matrix_check(Field::make(p, m)));
}

TEST_CASE("transport") {
  const CoordGroup G(2);
  const Diagram c4 = data("c4.dgm");
  const ACoord a{1, 1};
  CHECK(beta(G, c4, 2, 2, a) == a);
  CHECK(beta_along(G, {{0, 1}, {1, 2}}, a) == beta_along(G, {{0, 3}, {3, 2}}, a));
  CHECK(beta(G, c4, 0, 2, a) == a);
  for (ACoord x : G.elements())
    for (ACoord y : G.elements()) CHECK(beta(G, c4, 1, 3, G.add(x, y)) == G.add(beta(G, c4, 1, 3, x), beta(G, c4, 1, 3, y)));
  CHECK_THROWS_AS(beta(G, data("disjoint.dgm"), 0, 2, a), DomainError);

  // Path independence on random pairs of walks with equal endpoints.
  std::mt19937_64 rng(41);
  const Diagram theta = data("theta.dgm");
  int compared = 0;
  while (compared < 200) {
    const auto p1 = random_path(G, theta, 0, 1 + static_cast<int>(rng() % 6), rng);
    const auto p2 = random_path(G, theta, 0, 1 + static_cast<int>(rng() % 6), rng);
    if (p1.end() != p2.end()) continue;
    const ACoord x = random_coord(G, rng);
    CHECK(beta_along(G, p1.edges, x) == beta_along(G, p2.edges, x));
    ++compared;
  }
}

TEST_CASE("normal forms") {
  const CoordGroup G(2);
  const Diagram c4 = data("c4.dgm");

  GroupPath zero = plain(0, {{0, 1}, {1, 2}});
  CHECK(normal_form(G, zero).g == ACoord{});
  CHECK(normal_form(G, zero).edgeword == zero.edges);

  GroupPath loop = plain(0, {{0, 1}, {1, 0}});
  loop.letters[1] = ACoord{1, 0};
  const auto nf = normal_form(G, loop);
  CHECK(nf.edgeword == loop.edges);
  CHECK(nf.g == ACoord{1, 0});

  std::mt19937_64 rng(5);
  for (const char* name : {"c4.dgm", "theta.dgm", "a4.dgm"}) {
    const Diagram d = data(name);
    const CoordGroup G3(3);
    for (int k = 0; k < 300; ++k) {
      const auto p = random_path(G3, d, static_cast<int>(rng() % d.size()), static_cast<int>(rng() % 9), rng);
      check_path(d, p);
      CHECK(normal_form(G3, p) == normal_form_stepwise(G3, p));
    }
  }
  GroupPath broken = plain(0, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(check_path(c4, broken), DomainError);
  GroupPath off = plain(0, {{0, 2}});
  CHECK_THROWS_AS(check_path(c4, off), DomainError);
}

TEST_CASE("a group letter commutes past edges") {
  const CoordGroup G(3);
  const Diagram d = data("theta.dgm");
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    auto p = random_path(G, d, 0, 1 + static_cast<int>(rng() % 7), rng);
    const ACoord a = random_coord(G, rng);
    auto front = p;
    front.letters.front() = G.add(front.letters.front(), a);
    auto back = p;
    back.letters.back() = G.add(back.letters.back(), beta_along(G, p.edges, a));
    CHECK(normal_form(G, front) == normal_form(G, back));
  }
}

TEST_CASE("return elimination") {
  const CoordGroup G(2);
  GroupPath p = plain(0, {{0, 1}, {1, 0}});
  p.letters = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<ReturnStep> trace;
  const auto r = reduce_returns(G, p, &trace);
  CHECK(r.edges.empty());
  REQUIRE(r.letters.size() == 1);
  CHECK(r.letters[0] == ACoord{0, 0});
  CHECK(trace.size() == 1);

  GroupPath nested = plain(0, {{0, 1}, {1, 2}, {2, 1}, {1, 0}});
  nested.letters = {{1, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 1}};
  trace.clear();
  const auto n = reduce_returns(G, nested, &trace);
  CHECK(n.edges.empty());
  CHECK(n.letters == std::vector<ACoord>{{1, 1}});
  CHECK(trace.size() == 2);

  GroupPath straight = plain(0, {{0, 1}, {1, 2}});
  straight.letters = {{1, 0}, {0, 1}, {1, 1}};
  const auto s = reduce_returns(G, straight);
  CHECK(s.edges == straight.edges);
  CHECK(s.letters == straight.letters);

  std::mt19937_64 rng(13);
  const Diagram d = data("c5.dgm");
  for (int k = 0; k < 300; ++k) {
    const auto q = random_path(G, d, 0, static_cast<int>(rng() % 10), rng);
    const auto red = reduce_returns(G, q);
    CHECK(normal_form(G, red).g == normal_form(G, q).g);
    for (std::size_t i = 0; i + 1 < red.edges.size(); ++i) CHECK(red.edges[i + 1] != red.edges[i].reversed());
  }
}

TEST_CASE("homotopy witnesses") {
  const CoordGroup G(2);
  const Diagram c4 = data("c4.dgm");
  const std::vector<DirectedEdge> cycle = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  GroupPath p = plain(0, cycle);
  p.letters = {{1, 0}, {0, 1}, {0, 0}, {1, 1}, {0, 1}};
  const auto same = homotopy_witness(G, p, p);
  REQUIRE(same.has_value());
  for (ACoord h : *same) CHECK(h == ACoord{});

  // Shift by a coboundary: letter k gains h_k and loses h_{k+1}.
  const std::vector<ACoord> h = {{1, 1}, {0, 1}, {1, 0}, {1, 1}};
  GroupPath shifted = p;
  for (std::size_t k = 0; k < h.size(); ++k) {
    shifted.letters[k] = G.sub(shifted.letters[k], h[k]);
    shifted.letters[k + 1] = G.add(shifted.letters[k + 1], h[k]);
  }
  CHECK(normal_form(G, shifted) == normal_form(G, p));
  CHECK(homotopy_witness(G, p, shifted).has_value());

  GroupPath other = p;
  other.letters.back() = G.add(other.letters.back(), ACoord{1, 0});
  CHECK_FALSE(homotopy_witness(G, p, other).has_value());

  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_path(G, c4, 0, 1 + static_cast<int>(rng() % 6), rng);
    GroupPath b = a;
    for (auto& l : b.letters) l = random_coord(G, rng);
    CHECK(homotopy_witness(G, a, b).has_value() == (normal_form(G, a) == normal_form(G, b)));
  }
}

TEST_CASE("pointing files") {
  const CoordGroup G(2);
  const Diagram c4 = data("c4.dgm");
  const Pointing p = load_pointing(std::string(CTAM_TEST_DATA) + "/c4_flip.pt", c4, G);
  CHECK(p.at({2, 3}) == ACoord{1, 0});
  CHECK(p.at({3, 2}) == ACoord{});
  CHECK_FALSE(p.trivial());
  CHECK(parse_pointing(serialize(p, c4), c4, G) == p);
  CHECK(parse_pointing("delta 1 2 0 0\n", c4, G).trivial());
  CHECK_THROWS_AS(parse_pointing("delta 1 3 1 0\n", c4, G), InputError);
  CHECK_THROWS_AS(parse_pointing("delta 1 2 1 0\ndelta 1 2 0 1\n", c4, G), InputError);
  CHECK_THROWS_AS(parse_pointing("delta 1 2 2 0\n", c4, G), InputError);
  CHECK_THROWS_AS(parse_pointing("delta 1 9 0 0\n", c4, G), InputError);
  CHECK_THROWS_AS(parse_pointing("delta 1 2 0\n", c4, G), InputError);
}

TEST_CASE("the invariant of a pointing") {
  const CoordGroup G(2);
  const Diagram c4 = data("c4.dgm");
  const auto sd = spanning_structure(c4);
  CHECK(phi_of_pointing(G, Pointing{}, sd) == std::vector<ACoord>{{0, 0}});

  Pointing on_h;
  on_h.set(sd.extra[0], ACoord{1, 1});
  CHECK(phi_of_pointing(G, on_h, sd) == std::vector<ACoord>{{1, 1}});

  // Adding c at every out-edge of one non-base vertex leaves the invariant alone.
  std::mt19937_64 rng(23);
  const CoordGroup G3(3);
  const Diagram theta = data("theta.dgm");
  const auto sdt = spanning_structure(theta);
  for (int k = 0; k < 100; ++k) {
    Pointing delta;
    for (auto e : theta.directed_edges()) delta.set(e, random_coord(G3, rng));
    const int v = 1 + static_cast<int>(rng() % (theta.size() - 1));
    const ACoord c = random_coord(G3, rng);
    Pointing shifted = delta;
    for (int w : theta.neighbors(v)) shifted.set({v, w}, G3.add(delta.at({v, w}), c));
    CHECK(phi_of_pointing(G3, shifted, sdt) == phi_of_pointing(G3, delta, sdt));
    for (const auto& cyc : sdt.cycles)
      CHECK(phi_of_cycle(G3, delta, sdt.base, cyc) == phi_by_summation(G3, delta, cyc));

    // Homomorphism on concatenated cycle words.
    std::vector<DirectedEdge> word = sdt.cycles[0];
    word.insert(word.end(), sdt.cycles[1].begin(), sdt.cycles[1].end());
    word.insert(word.end(), sdt.cycles[0].begin(), sdt.cycles[0].end());
    const auto phi = phi_of_pointing(G3, delta, sdt);
    CHECK(phi_of_cycle(G3, delta, sdt.base, word) == G3.add(G3.add(phi[0], phi[1]), phi[0]));
  }
}

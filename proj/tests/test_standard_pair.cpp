#include <random>
#include <set>

#include "doctest.h"

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"
#include "ctam/standard_pair.hpp"

using namespace ctam;

namespace {

std::vector<Mat> embed_all(const Field& F, const BlockEmbedding& b, const std::vector<Mat>& gens) {
  std::vector<Mat> out;
  for (const auto& g : gens) out.push_back(b.embed(F, g));
  return out;
}

Vec unit(const Field& F, int i) {
  Vec v(3, F.zero());
  v[i] = F.one();
  return v;
}

// Every line of k^3 inside span(a, b), as a normalized spanning vector.
std::vector<Vec> lines_in(const Field& F, const Vec& a, const Vec& b) {
  std::vector<Vec> out{b};
  for (Elem c : F.elements()) {
    Vec v(3);
    for (int i = 0; i < 3; ++i) v[i] = F.add(a[i], F.mul(c, b[i]));
    out.push_back(v);
  }
  return out;
}

// Complements to the upper-left SL_2 normalized by d, found by enumerating
// every line U in V1 and every plane W containing U1 with U not in W.
int brute_force_complements(const Field& F, const Mat& d) {
  const Vec e1 = unit(F, 0), e2 = unit(F, 1), e3 = unit(F, 2);
  int count = 0;
  for (const auto& u : lines_in(F, e1, e2)) {
    if (!preserves(F, d, {u})) continue;
    for (const auto& w : lines_in(F, e1, e2)) {
      const std::vector<Vec> plane = row_reduce(F, {w, e3});
      if (contains(F, plane, u) || !preserves(F, d, plane)) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("upper-left and lower-right blocks form a standard pair") {
  const Field F = Field::make(2, 2);
  const auto gens = sl2_generators(F);
  const auto ul = embed_all(F, BlockEmbedding::upper_left(F), gens);
  const auto lr = embed_all(F, BlockEmbedding::lower_right(F), gens);
  const auto w = is_standard_pair(F, ul, lr);
  REQUIRE(w.has_value());
  CHECK(rank(F, w->u1) == 1);
  CHECK(rank(F, w->v1) == 2);
  CHECK(subspace_le(F, w->u2, w->v1));
  CHECK(subspace_le(F, w->u1, w->v2));
  CHECK_FALSE(is_standard_pair(F, ul, ul).has_value());

  const auto rev = embed_all(F, BlockEmbedding::lower_right_reversed(F), gens);
  CHECK(is_standard_pair(F, ul, rev).has_value());

  // Conjugating both groups by the same element keeps them a standard pair.
  std::mt19937_64 rng(2);
  const auto sl3 = sl3_generators(F);
  Mat g = Mat::identity(F, 3);
  for (int k = 0; k < 8; ++k) g = mul(F, g, sl3[rng() % sl3.size()]);
  std::vector<Mat> ul_g, lr_g;
  for (const auto& x : ul) ul_g.push_back(conjugate(F, g, x));
  for (const auto& x : lr) lr_g.push_back(conjugate(F, g, x));
  CHECK(is_standard_pair(F, ul_g, lr_g).has_value());
}

TEST_CASE("block embeddings are injective homomorphisms with a working inverse") {
  const Field F = Field::make(3, 1);
  for (const auto& b : {BlockEmbedding::upper_left(F), BlockEmbedding::lower_right(F),
                        BlockEmbedding::lower_right_reversed(F)}) {
    std::set<std::vector<Elem>> images;
    const auto els = sl2_elements(F);
    for (const auto& m : els) {
      const Mat e = b.embed(F, m);
      CHECK(det(F, e) == F.one());
      CHECK(b.extract(F, e) == m);
      images.insert(e.entries());
    }
    CHECK(images.size() == els.size());
    CHECK(mul(F, b.embed(F, els[3]), b.embed(F, els[7])) == b.embed(F, mul(F, els[3], els[7])));
    CHECK_FALSE(b.extract(F, root_elem(F, 3, 0, 2, F.one())).has_value());
  }
}

TEST_CASE("two complements normalized by the torus, matching brute force") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {5, 1}, {2, 3}}) {
    const Field F = Field::make(p, m);
    const Mat d1 = standard_d1_generator(F);
    const auto s1 = embed_all(F, BlockEmbedding::upper_left(F), sl2_generators(F));
    const auto comps = standard_complements_normalized(F, d1, s1);
    CHECK(comps.size() == 2);
    CHECK(brute_force_complements(F, d1) == 2);
    for (const auto& c : comps) {
      const auto s2 = embed_all(F, c, sl2_generators(F));
      CHECK(is_standard_pair(F, s1, s2).has_value());
      for (const auto& g : s2) CHECK(closure(F, s2).count(conjugate(F, d1, g)) == 1);
    }
  }
}

TEST_CASE("the torus generator needs at least four field elements") {
  const Field F2 = Field::make(2, 1);
  const auto s1 = embed_all(F2, BlockEmbedding::upper_left(F2), sl2_generators(F2));
  CHECK_THROWS_AS(standard_complements_normalized(F2, standard_d1_generator(F2), s1), DomainError);
  const Field F3 = Field::make(3, 1);
  CHECK_THROWS_AS(eigenlines(F3, standard_d1_generator(F3)), DomainError);
}

TEST_CASE("exactly one torus of the complement is normalized, and it is the centralizer") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {5, 1}}) {
    const Field F = Field::make(p, m);
    const Mat d1 = standard_d1_generator(F);
    const auto s2 = BlockEmbedding::lower_right(F);
    const auto tori = tori_normalized_by(F, {d1}, s2);
    REQUIRE(tori.size() == 1);
    CHECK(tori[0].size() == static_cast<std::size_t>(F.order() - 1));
    const MatSet group = closure(F, embed_all(F, s2, sl2_generators(F)));
    const MatSet cent = centralizer(F, group, {d1});
    CHECK(cent == tori[0]);
    for (const auto& x : tori[0]) CHECK(is_diagonal(F, x));
  }
}

TEST_CASE("diagonal extension over GF(4)") {
  const Field F = Field::make(2, 2);
  const Elem z = F.x();
  const Elem z2 = F.mul(z, z);
  const Mat ext = extend_diagonal(F, z, z2, z, z2);
  CHECK(ext == Mat::diag(std::vector<Elem>{z2, F.one(), z}));
  CHECK(det(F, ext) == F.one());
  // Conjugation by the extension restricts to conjugation by diag(a, b) on the
  // upper-left block and by diag(c, d) on the lower-right block.
  const auto ul = BlockEmbedding::upper_left(F);
  const auto lr = BlockEmbedding::lower_right(F);
  const Mat ab = Mat::diag(std::vector<Elem>{z, z2});
  for (const auto& m : sl2_elements(F)) {
    CHECK(conjugate(F, ext, ul.embed(F, m)) == ul.embed(F, conjugate(F, ab, m)));
    CHECK(conjugate(F, ext, lr.embed(F, m)) == lr.embed(F, conjugate(F, ab, m)));
  }
}

TEST_CASE("common Borel test on root groups") {
  const Field F = Field::make(2, 2);
  std::vector<Mat> x12, x23, x21;
  for (Elem b : F.prime_basis()) {
    x12.push_back(root_elem(F, 3, 0, 1, b));
    x23.push_back(root_elem(F, 3, 1, 2, b));
    x21.push_back(root_elem(F, 3, 1, 0, b));
  }
  const auto both = common_borel(F, x12, x23);
  CHECK(both.unipotent);
  CHECK(both.order == 64);
  CHECK(simple_root_pair(F, both));
  CHECK_FALSE(common_borel(F, x12, x21).unipotent);
  const auto same = common_borel(F, x12, x12);
  CHECK(same.unipotent);
  CHECK(same.order == 4);
  CHECK_FALSE(simple_root_pair(F, same));
}

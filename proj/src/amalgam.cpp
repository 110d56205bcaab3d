#include "ctam/amalgam.hpp"

#include <algorithm>

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"

namespace ctam {

namespace {

SLAut inverse_twist(const Field& F, ACoord t) { return SLAut{t.eps, F.reduce_aut(-t.r), std::nullopt}; }

// Words of length <= 3 in the generators.
std::vector<Mat> short_products(const Field& F, const std::vector<Mat>& gens) {
  std::vector<Mat> out = gens;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      out.push_back(mul(F, x, y));
      for (const auto& z : gens) out.push_back(mul(F, mul(F, x, y), z));
    }
  return out;
}

std::vector<Mat> sorted(std::vector<Mat> v) {
  std::sort(v.begin(), v.end(), [](const Mat& a, const Mat& b) { return a.entries() < b.entries(); });
  return v;
}

}  // namespace

Mat CTAmalgam::include(DirectedEdge e, const Mat& x) const {
  auto it = inclusions.find(e);
  if (it == inclusions.end()) throw DomainError("no inclusion for a non-edge");
  const auto& inc = it->second;
  return inc.block.embed(field, apply_slaut(field, inverse_twist(field, inc.twist), x));
}

std::vector<Mat> CTAmalgam::include_all(DirectedEdge e, const std::vector<Mat>& xs) const {
  std::vector<Mat> out;
  for (const auto& x : xs) out.push_back(include(e, x));
  return out;
}

bool CTAmalgam::in_image(DirectedEdge e, const Mat& m) const {
  return inclusions.at(e).block.extract(field, m).has_value();
}

CTAmalgam build_amalgam(const Diagram& d, const Pointing& delta, const Field& F, BlockConvention convention) {
  const auto adm = check_admissible(d);
  if (!adm.ok) throw DomainError("diagram is not admissible: " + adm.violation);
  if (F.order() < 4) throw DomainError("GF(" + F.name() + ") has fewer than 4 elements");
  CTAmalgam A{F, d, delta, convention, {}};
  const BlockEmbedding second = convention == BlockConvention::natural ? BlockEmbedding::lower_right(F)
                                                                       : BlockEmbedding::lower_right_reversed(F);
  for (auto e : d.edges()) {
    A.inclusions.emplace(e, Inclusion{BlockEmbedding::upper_left(F), delta.at(e)});
    A.inclusions.emplace(e.reversed(), Inclusion{second, delta.at(e.reversed())});
  }
  const auto rep = verify_ct_axioms(A);
  if (!rep.ok)
    for (const auto& c : rep.checks)
      if (!c.ok) throw DomainError("built amalgam fails " + c.name + ": " + c.detail);
  return A;
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  ok = ok && passed;
  checks.push_back({std::move(name), passed, std::move(detail)});
}

CentralPair central_normalize(const Field& F, CentralPair x) {
  CentralPair neg{scale(F, F.neg(F.one()), x.left), scale(F, F.neg(F.one()), x.right)};
  if (std::pair(neg.left.entries(), neg.right.entries()) < std::pair(x.left.entries(), x.right.entries()))
    return neg;
  return x;
}

CentralPair central_mul(const Field& F, const CentralPair& x, const CentralPair& y) {
  return central_normalize(F, {mul(F, x.left, y.left), mul(F, x.right, y.right)});
}

std::vector<std::pair<int, int>> non_edges(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (!d.adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

CheckReport verify_ct_axioms(const CTAmalgam& A) {
  const Field& F = A.field;
  const Diagram& d = A.diagram;
  CheckReport rep;
  const auto gens = sl2_generators(F);
  const auto products = short_products(F, gens);
  const auto elements = F.order() <= 9 ? sl2_elements(F) : std::vector<Mat>{};
  const Mat id2 = Mat::identity(F, 2);
  const Mat id3 = Mat::identity(F, 3);
  const CoordGroup G(F);

  for (auto e : d.edges()) {
    const std::string name = d.label(e.from) + "-" + d.label(e.to);
    if (!A.inclusions.count(e) || !A.inclusions.count(e.reversed())) {
      rep.add("inclusions " + name, false, "missing inclusion");
      continue;
    }
    const auto s1 = A.include_all(e, gens);
    const auto s2 = A.include_all(e.reversed(), gens);
    rep.add("CT2 " + name, is_standard_pair(F, s1, s2).has_value());

    for (auto de : {e, e.reversed()}) {
      const std::string dname = d.label(de.from) + "->" + d.label(de.to);
      bool hom = true;
      for (const auto& x : gens)
        for (const auto& y : products) {
          const Mat lhs = A.include(de, mul(F, x, y));
          const Mat rhs = mul(F, A.include(de, x), A.include(de, y));
          hom = hom && lhs == rhs && det(F, lhs) == F.one();
        }
      rep.add("homomorphism " + dname, hom);

      bool injective = true;
      for (const auto& x : elements)
        if (x != id2 && A.include(de, x) == id3) injective = false;
      rep.add("injective " + dname, injective, elements.empty() ? "skipped for q > 9" : "");

      // ad(phi)(A_{i,j}) = A_i: every edge coordinate pulls back to the
      // vertex coordinate with the same value.
      bool concrete = true;
      for (ACoord c : G.elements()) {
        const SLAut aut{c.eps, c.r, std::nullopt};
        for (const auto& x : gens)
          concrete = concrete && apply_slaut(F, aut, A.include(de, x)) == A.include(de, apply_slaut(F, aut, x));
      }
      rep.add("concrete " + dname, concrete);
    }
  }

  for (auto [i, j] : non_edges(d)) {
    bool ok = true;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const CentralPair gx = central_normalize(F, {x, id2});
        const CentralPair gy = central_normalize(F, {id2, y});
        ok = ok && central_mul(F, gx, gy) == central_mul(F, gy, gx);
      }
    rep.add("central product " + d.label(i) + "," + d.label(j), ok);
  }
  return rep;
}

std::vector<Mat> normalizer_pullback(const CTAmalgam& A, DirectedEdge e) {
  const Field& F = A.field;
  if (F.order() > 9) throw BudgetExceeded("normalizer scan limited to q <= 9");
  const auto other = A.include_all(e.reversed(), sl2_generators(F));
  std::vector<Mat> out;
  for (const auto& x : sl2_elements(F)) {
    const Mat X = A.include(e, x);
    bool normalizes = true;
    for (const auto& y : other)
      if (!A.in_image(e.reversed(), conjugate(F, X, y))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(x);
  }
  return sorted(out);
}

TorusReport compute_Di(const CTAmalgam& A, int i) {
  const Field& F = A.field;
  const Diagram& d = A.diagram;
  TorusReport rep;
  const auto nbrs = d.neighbors(i);
  if (nbrs.empty()) throw DomainError("vertex " + d.label(i) + " has no neighbours");
  const std::size_t q = F.order();

  for (int j : nbrs) {
    const DirectedEdge e{i, j};
    auto di = normalizer_pullback(A, e);
    auto dj = normalizer_pullback(A, e.reversed());
    rep.per_neighbor[j] = di;

    // Images of D_i and D_j normalize both blocks and generate a diagonal
    // torus of order (q-1)^2.
    std::vector<Mat> torus_gens;
    for (const auto& x : di) torus_gens.push_back(A.include(e, x));
    for (const auto& x : dj) torus_gens.push_back(A.include(e.reversed(), x));
    bool ok = di.size() == q - 1 && dj.size() == q - 1;
    const auto gi = A.include_all(e, sl2_generators(F));
    const auto gj = A.include_all(e.reversed(), sl2_generators(F));
    for (const auto& t : torus_gens) {
      for (const auto& y : gi) ok = ok && A.in_image(e, conjugate(F, t, y));
      for (const auto& y : gj) ok = ok && A.in_image(e.reversed(), conjugate(F, t, y));
    }
    const auto generated = closure(F, torus_gens);
    for (const auto& t : generated) ok = ok && is_diagonal(F, t);
    ok = ok && generated.size() == (q - 1) * (q - 1);
    if (!ok) {
      rep.ij_torus_ok = false;
      rep.detail += "edge " + d.label(i) + "-" + d.label(j) + " has no common diagonal torus; ";
    }
  }
  rep.torus = rep.per_neighbor.begin()->second;
  for (const auto& [j, t] : rep.per_neighbor)
    if (t != rep.torus) {
      rep.edge_independent = false;
      rep.detail += "D_i through " + d.label(j) + " differs; ";
    }
  return rep;
}

OrientationResult orientation_search(const CTAmalgam& A) {
  const Field& F = A.field;
  const Diagram& d = A.diagram;
  const int n = d.size();
  if (n > 16) throw DomainError("orientation search limited to 16 vertices");
  const std::vector<Mat> root[2] = {sl2_upper_root_gens(F), sl2_lower_root_gens(F)};

  // cache[edge][sign_from][sign_to], sign index 0 = +, 1 = -
  struct EdgeTable {
    BorelCertificate cert[2][2];
    bool ok[2][2];
  };
  std::vector<EdgeTable> table(d.edges().size());
  for (std::size_t k = 0; k < d.edges().size(); ++k) {
    const DirectedEdge e = d.edges()[k];
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        const auto cert = common_borel(F, A.include_all(e, root[s]), A.include_all(e.reversed(), root[t]));
        table[k].cert[s][t] = cert;
        table[k].ok[s][t] = simple_root_pair(F, cert);
      }
  }

  OrientationResult res;
  const unsigned long total = 1ul << n;
  for (unsigned long mask = 0; mask < total; ++mask) {
    ++res.assignments_tried;
    auto sign_index = [&](int v) { return static_cast<int>((mask >> (n - 1 - v)) & 1ul); };
    bool ok = true;
    for (std::size_t k = 0; k < d.edges().size() && ok; ++k) {
      const DirectedEdge e = d.edges()[k];
      ok = table[k].ok[sign_index(e.from)][sign_index(e.to)];
    }
    if (!ok) continue;
    OrientationWitness w;
    for (int v = 0; v < n; ++v) w.sign.push_back(sign_index(v) ? -1 : 1);
    for (std::size_t k = 0; k < d.edges().size(); ++k) {
      const DirectedEdge e = d.edges()[k];
      w.certificates[e] = table[k].cert[sign_index(e.from)][sign_index(e.to)];
    }
    res.witness = std::move(w);
    break;
  }
  return res;
}

namespace {

// The diagonal automorphism seen after the inverse twist of an inclusion.
DiagonalSpec through_twist(const Field& F, DiagonalSpec t, ACoord twist) {
  const FieldAut back{F.reduce_aut(-twist.r)};
  DiagonalSpec out{F.frobenius(back, t.a), F.frobenius(back, t.b)};
  if (twist.eps) out = {F.inv(out.a), F.inv(out.b)};
  return out;
}

Mat diag2(DiagonalSpec t) {
  const std::vector<Elem> v = {t.a, t.b};
  return Mat::diag(v);
}

}  // namespace

ExtensionReport apply_diagonal_extension(const CTAmalgam& A, const std::vector<DiagonalSpec>& tau) {
  const Field& F = A.field;
  const Diagram& d = A.diagram;
  if (static_cast<int>(tau.size()) != d.size()) throw DomainError("one diagonal spec per vertex required");
  ExtensionReport rep;
  const auto gens = sl2_generators(F);

  for (auto e : d.edges()) {
    const DiagonalSpec ti = through_twist(F, tau[e.from], A.inclusions.at(e).twist);
    DiagonalSpec tj = through_twist(F, tau[e.to], A.inclusions.at(e.reversed()).twist);
    if (A.convention == BlockConvention::reversed) std::swap(tj.a, tj.b);
    const Mat tij = extend_diagonal(F, ti.a, ti.b, tj.a, tj.b);
    rep.edge_maps.emplace(e, tij);
    for (auto de : {e, e.reversed()}) {
      const Mat local = diag2(tau[de.from]);
      bool ok = true;
      for (const auto& x : gens)
        ok = ok && conjugate(F, tij, A.include(de, x)) == A.include(de, conjugate(F, local, x));
      rep.checks.add("extension " + d.label(de.from) + "->" + d.label(de.to), ok);
    }
  }

  // On G_i * G_j the extension acts componentwise; it must not depend on the
  // representative of a class.
  const Mat minus = scale(F, F.neg(F.one()), Mat::identity(F, 2));
  for (auto [i, j] : non_edges(d)) {
    const Mat li = diag2(tau[i]);
    const Mat lj = diag2(tau[j]);
    bool ok = true;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const CentralPair rep1{x, y};
        const CentralPair rep2{mul(F, minus, x), mul(F, minus, y)};
        const auto img1 = central_normalize(F, {conjugate(F, li, rep1.left), conjugate(F, lj, rep1.right)});
        const auto img2 = central_normalize(F, {conjugate(F, li, rep2.left), conjugate(F, lj, rep2.right)});
        ok = ok && img1 == img2;
      }
    rep.checks.add("central product extension " + d.label(i) + "," + d.label(j), ok);
  }
  rep.ok = rep.checks.ok;
  return rep;
}

}  // namespace ctam

#include "ctam/completion.hpp"

#include <set>

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"

namespace ctam {

LMat Placement::place(const Field& F, int n, const Mat& m) const {
  LMat out = LMat::identity(F, n);
  const int k = static_cast<int>(coords.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      out(coords[a], coords[b]) = LaurentPoly::monomial(m(a, b), weights[a] - weights[b]);
  return out;
}

std::optional<std::vector<int>> walk_order(const Diagram& d, bool cycle) {
  const int n = d.size();
  const int want_edges = cycle ? n : n - 1;
  if (static_cast<int>(d.edges().size()) != want_edges) return std::nullopt;
  std::vector<int> out_edge(n, -1), in_deg(n, 0);
  for (auto e : d.edges()) {
    if (out_edge[e.from] >= 0) return std::nullopt;
    out_edge[e.from] = e.to;
    ++in_deg[e.to];
  }
  int start = 0;
  if (!cycle) {
    start = -1;
    for (int v = 0; v < n; ++v)
      if (in_deg[v] == 0) {
        if (start >= 0) return std::nullopt;
        start = v;
      }
    if (start < 0) return std::nullopt;
  }
  std::vector<int> order{start};
  std::set<int> seen{start};
  for (int v = out_edge[start]; v >= 0 && !seen.count(v); v = out_edge[v]) {
    order.push_back(v);
    seen.insert(v);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  if (cycle && out_edge[order.back()] != start) return std::nullopt;
  return order;
}

namespace {

void require_trivial(const CTAmalgam& A) {
  if (!A.pointing.trivial()) throw DomainError("no completion witness available for a twisted pointing");
  if (A.convention != BlockConvention::natural)
    throw DomainError("completion witnesses use the natural block convention");
}

}  // namespace

CompletionWitness spherical_completion(const CTAmalgam& A) {
  require_trivial(A);
  const auto order = walk_order(A.diagram, false);
  if (!order) throw DomainError("spherical completion needs a path written along its walk");
  const int k = static_cast<int>(order->size());
  CompletionWitness w;
  w.n = k + 1;
  if (w.n > 8) throw DomainError("completion dimension above 8");
  for (int i = 0; i < k; ++i) w.vertex[(*order)[i]] = Placement{{i, i + 1}, {0, 0}};
  for (int i = 0; i + 1 < k; ++i)
    w.edge[DirectedEdge{(*order)[i], (*order)[i + 1]}] = Placement{{i, i + 1, i + 2}, {0, 0, 0}};
  return w;
}

CompletionWitness affine_completion(const CTAmalgam& A) {
  require_trivial(A);
  const auto order = walk_order(A.diagram, true);
  if (!order) throw DomainError("affine completion needs a cycle written along its walk");
  const int n = static_cast<int>(order->size());
  if (n < 4) throw DomainError("affine completion needs at least 4 vertices");
  if (n > 8) throw DomainError("completion dimension above 8");
  CompletionWitness w;
  w.n = n;
  w.laurent = true;
  const auto& v = *order;
  for (int i = 0; i + 1 < n; ++i) w.vertex[v[i]] = Placement{{i, i + 1}, {0, 0}};
  // The last vertex acts on (e_n, t e_1).
  w.vertex[v[n - 1]] = Placement{{n - 1, 0}, {0, 1}};
  for (int i = 0; i + 2 < n; ++i) w.edge[DirectedEdge{v[i], v[i + 1]}] = Placement{{i, i + 1, i + 2}, {0, 0, 0}};
  w.edge[DirectedEdge{v[n - 2], v[n - 1]}] = Placement{{n - 2, n - 1, 0}, {0, 0, 1}};
  w.edge[DirectedEdge{v[n - 1], v[0]}] = Placement{{n - 1, 0, 1}, {0, 1, 1}};
  return w;
}

CheckReport verify_completion(const CTAmalgam& A, const CompletionWitness& w, std::optional<Elem> eval_at) {
  const Field& F = A.field;
  const Diagram& d = A.diagram;
  CheckReport rep;
  const auto gens = sl2_generators(F);
  const LaurentPoly one = LaurentPoly::constant(F.one());

  // Either compare Laurent matrices directly or after substituting t.
  auto same = [&](const LMat& x, const LMat& y) {
    return eval_at ? evaluate(F, x, *eval_at) == evaluate(F, y, *eval_at) : x == y;
  };
  auto unit_det = [&](const LMat& x) {
    return eval_at ? det(F, evaluate(F, x, *eval_at)) == F.one() : det(F, x) == one;
  };

  for (int i = 0; i < d.size(); ++i) {
    auto it = w.vertex.find(i);
    if (it == w.vertex.end()) {
      rep.add("vertex map " + d.label(i), false, "missing");
      continue;
    }
    bool dets = true;
    for (const auto& x : gens) dets = dets && unit_det(it->second.place(F, w.n, x));
    rep.add("det vertex " + d.label(i), dets);

    bool injective = true;
    if (F.order() <= 9) {
      const LMat id = LMat::identity(F, w.n);
      const Mat id2 = Mat::identity(F, 2);
      for (const auto& x : sl2_elements(F))
        if (x != id2 && same(it->second.place(F, w.n, x), id)) injective = false;
    }
    rep.add("injective vertex " + d.label(i), injective);
  }

  for (auto e : d.edges()) {
    const std::string name = d.label(e.from) + "-" + d.label(e.to);
    auto it = w.edge.find(e);
    if (it == w.edge.end()) {
      rep.add("edge map " + name, false, "missing");
      continue;
    }
    bool dets = true;
    for (const auto& x : sl3_generators(F)) dets = dets && unit_det(it->second.place(F, w.n, x));
    rep.add("det edge " + name, dets);
    for (auto de : {e, e.reversed()}) {
      auto vit = w.vertex.find(de.from);
      if (vit == w.vertex.end()) continue;
      bool ok = true;
      for (const auto& x : gens)
        ok = ok && same(it->second.place(F, w.n, A.include(de, x)), vit->second.place(F, w.n, x));
      rep.add("square " + d.label(de.from) + "->" + d.label(de.to), ok);
    }
  }

  for (auto [i, j] : non_edges(d)) {
    auto vi = w.vertex.find(i);
    auto vj = w.vertex.find(j);
    if (vi == w.vertex.end() || vj == w.vertex.end()) continue;
    bool ok = true;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const LMat X = vi->second.place(F, w.n, x);
        const LMat Y = vj->second.place(F, w.n, y);
        ok = ok && same(mul(F, X, Y), mul(F, Y, X));
      }
    rep.add("commute " + d.label(i) + "," + d.label(j), ok);
  }
  return rep;
}

}  // namespace ctam

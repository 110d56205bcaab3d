#include "ctam/classifier.hpp"

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"

namespace ctam {

Pointing random_pointing(const CoordGroup& G, const Diagram& d, std::mt19937_64& rng) {
  const auto coords = G.elements();
  Pointing p;
  for (auto e : d.directed_edges()) p.set(e, coords[rng() % coords.size()]);
  return p;
}

Pointing with_phi(const CoordGroup& G, const Pointing& delta, const SpanningData& sd,
                  const std::vector<ACoord>& target) {
  // Each H-edge lies on its own cycle only, traversed once forwards.
  Pointing out = delta;
  const auto current = phi_of_pointing(G, delta, sd);
  for (std::size_t k = 0; k < sd.extra.size(); ++k)
    out.set(sd.extra[k], G.add(delta.at(sd.extra[k]), G.sub(target[k], current[k])));
  return out;
}

std::string class_key(const std::vector<ACoord>& phi) {
  std::string s;
  for (ACoord a : phi) s += format(a);
  return s;
}

Pointing canonical_pointing(const SpanningData& sd, const std::vector<ACoord>& phi) {
  Pointing p;
  for (std::size_t k = 0; k < sd.extra.size(); ++k) p.set(sd.extra[k], phi[k]);
  return p;
}

std::vector<IsoClass> enumerate_classes(const Diagram& d, const Field& F) {
  return enumerate_classes(d, F, spanning_structure(d));
}

std::vector<IsoClass> enumerate_classes(const Diagram& d, const Field& F, const SpanningData& sd) {
  const auto adm = check_admissible(d);
  if (!adm.ok) throw DomainError("diagram is not admissible: " + adm.violation);
  if (F.order() < 4) throw DomainError("GF(" + F.name() + ") has fewer than 4 elements");
  const CoordGroup G(F);
  const auto coords = G.elements();
  const std::size_t h = sd.extra.size();

  std::vector<IsoClass> out;
  std::vector<std::size_t> digits(h, 0);
  while (true) {
    IsoClass c;
    for (std::size_t k = 0; k < h; ++k) c.phi.push_back(coords[digits[k]]);
    c.orientable = is_orientable_phi(c.phi);
    c.canonical = canonical_pointing(sd, c.phi);
    out.push_back(std::move(c));
    std::size_t k = h;
    while (k > 0 && ++digits[k - 1] == coords.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool is_orientable_phi(const std::vector<ACoord>& phi) {
  for (ACoord a : phi)
    if (a.eps != 0) return false;
  return true;
}

bool is_orientable_phi(const IsoClass& c) { return is_orientable_phi(c.phi); }

bool pointings_isomorphic(const CoordGroup& G, const Pointing& d1, const Pointing& d2, const SpanningData& sd) {
  return phi_of_pointing(G, d1, sd) == phi_of_pointing(G, d2, sd);
}

bool verify_iso_witness(const CoordGroup& G, const Diagram& d, const Pointing& d1, const Pointing& d2,
                        const IsoWitness& w) {
  if (static_cast<int>(w.vertex.size()) != d.size()) return false;
  for (auto e : d.edges()) {
    auto it = w.edge.find(e);
    if (it == w.edge.end()) return false;
    const ACoord aij = it->second;
    for (auto de : {e, e.reversed()}) {
      const ACoord lhs = G.add(d1.at(de), alpha(de, aij));
      const ACoord rhs = G.add(w.vertex[de.from], d2.at(de));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<IsoWitness> oracle_pointing_iso(const CoordGroup& G, const Diagram& d, const Pointing& d1,
                                              const Pointing& d2, SearchStats* stats, std::size_t budget) {
  const int n = d.size();
  if (n > 12) throw DomainError("pointing oracle limited to 12 vertices");
  const auto coords = G.elements();
  std::vector<ACoord> a(n);
  std::size_t nodes = 0;

  // Edges whose later endpoint (in vertex order) is v; checked once v is set.
  std::vector<std::vector<DirectedEdge>> closing(n);
  for (auto e : d.edges()) closing[std::max(e.from, e.to)].push_back(e);

  auto forced = [&](DirectedEdge de) { return alpha_inverse(de, G.sub(G.add(a[de.from], d2.at(de)), d1.at(de))); };

  auto search = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (ACoord c : coords) {
      if (++nodes > budget) throw BudgetExceeded("pointing oracle exceeded its search budget");
      a[v] = c;
      bool ok = true;
      for (auto e : closing[v])
        if (forced(e) != forced(e.reversed())) {
          ok = false;
          break;
        }
      if (ok && self(self, v + 1)) return true;
    }
    return false;
  };

  const bool found = search(search, 0);
  if (stats) stats->nodes = nodes;
  if (!found) return std::nullopt;
  IsoWitness w;
  w.vertex = a;
  for (auto e : d.edges()) w.edge[e] = forced(e);
  if (!verify_iso_witness(G, d, d1, d2, w)) throw Error("pointing oracle produced an invalid witness");
  return w;
}

namespace {

SLAut coord_aut(ACoord c) { return SLAut{c.eps, c.r, std::nullopt}; }

}  // namespace

bool verify_matrix_witness(const CTAmalgam& a1, const CTAmalgam& a2, const MatrixIsoWitness& w) {
  const Field& F = a1.field;
  const auto gens = sl2_generators(F);
  for (auto e : a1.diagram.edges()) {
    auto it = w.edge.find(e);
    if (it == w.edge.end()) return false;
    const SLAut edge_aut = coord_aut(it->second);
    for (auto de : {e, e.reversed()}) {
      const SLAut vertex_aut = coord_aut(w.vertex[de.from]);
      for (const auto& x : gens)
        if (apply_slaut(F, edge_aut, a1.include(de, x)) != a2.include(de, apply_slaut(F, vertex_aut, x)))
          return false;
    }
  }
  return true;
}

std::optional<MatrixIsoWitness> oracle_matrix_iso(const CTAmalgam& a1, const CTAmalgam& a2) {
  const Field& F = a1.field;
  const Diagram& d = a1.diagram;
  if (!(F == a2.field) || serialize(d) != serialize(a2.diagram))
    throw DomainError("amalgams must share field and diagram");
  const int n = d.size();
  if (n > 6) throw DomainError("matrix oracle limited to 6 vertices");
  const CoordGroup G(F);
  const auto coords = G.elements();
  const int k = G.size();
  const auto gens = sl2_generators(F);

  // Precompute the semilinear images once.
  std::vector<std::vector<Mat>> vertex_img(k);  // [vertex aut][gen]
  for (int c = 0; c < k; ++c)
    for (const auto& x : gens) vertex_img[c].push_back(apply_slaut(F, coord_aut(coords[c]), x));

  // ok[edge][ci][cj] = first edge automorphism satisfying both squares, or -1.
  const auto& edges = d.edges();
  std::vector<std::vector<std::vector<int>>> table(edges.size(), std::vector<std::vector<int>>(k, std::vector<int>(k, -1)));
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const DirectedEdge e = edges[idx];
    std::vector<std::vector<Mat>> lhs[2];  // [direction][edge aut][gen]
    for (int dir = 0; dir < 2; ++dir) {
      const DirectedEdge de = dir ? e.reversed() : e;
      lhs[dir].resize(k);
      for (int c = 0; c < k; ++c)
        for (const auto& x : gens) lhs[dir][c].push_back(apply_slaut(F, coord_aut(coords[c]), a1.include(de, x)));
    }
    for (int ci = 0; ci < k; ++ci)
      for (int cj = 0; cj < k; ++cj) {
        std::vector<Mat> rhs_i, rhs_j;
        for (const auto& y : vertex_img[ci]) rhs_i.push_back(a2.include(e, y));
        for (const auto& y : vertex_img[cj]) rhs_j.push_back(a2.include(e.reversed(), y));
        for (int ce = 0; ce < k; ++ce)
          if (lhs[0][ce] == rhs_i && lhs[1][ce] == rhs_j) {
            table[idx][ci][cj] = ce;
            break;
          }
      }
  }

  std::vector<int> choice(n, 0);
  const long total = [&] {
    long t = 1;
    for (int v = 0; v < n; ++v) t *= k;
    return t;
  }();
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int v = n - 1; v >= 0; --v) {
      choice[v] = static_cast<int>(c % k);
      c /= k;
    }
    bool ok = true;
    for (std::size_t idx = 0; idx < edges.size() && ok; ++idx)
      ok = table[idx][choice[edges[idx].from]][choice[edges[idx].to]] >= 0;
    if (!ok) continue;
    MatrixIsoWitness w;
    for (int v = 0; v < n; ++v) w.vertex.push_back(coords[choice[v]]);
    for (std::size_t idx = 0; idx < edges.size(); ++idx)
      w.edge[edges[idx]] = coords[table[idx][choice[edges[idx].from]][choice[edges[idx].to]]];
    if (!verify_matrix_witness(a1, a2, w)) throw Error("matrix oracle produced an invalid witness");
    return w;
  }
  return std::nullopt;
}

IsoWitness project(const MatrixIsoWitness& w) { return IsoWitness{w.vertex, w.edge}; }

}  // namespace ctam

#include "ctam/path_group.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"
#include "ctam/standard_pair.hpp"

namespace ctam {

CoordGroup::CoordGroup(int m) : m_(m) {
  if (m < 1) throw DomainError("coordinate group needs m >= 1");
}

ACoord CoordGroup::checked(int eps, int r) const {
  if (eps < 0 || eps > 1) throw InputError("eps must be 0 or 1, got " + std::to_string(eps));
  if (r < 0 || r >= m_)
    throw InputError("Frobenius exponent must lie in [0," + std::to_string(m_) + "), got " + std::to_string(r));
  return {eps, r};
}

std::vector<ACoord> CoordGroup::elements() const {
  std::vector<ACoord> out;
  for (int e = 0; e < 2; ++e)
    for (int r = 0; r < m_; ++r) out.push_back({e, r});
  return out;
}

std::string format(ACoord a) { return "(" + std::to_string(a.eps) + "," + std::to_string(a.r) + ")"; }

ACoord alpha(DirectedEdge, ACoord a) { return a; }
ACoord alpha_inverse(DirectedEdge, ACoord a) { return a; }

bool alpha_matrix_check(const Field& F) {
  const CoordGroup G(F);
  const auto gens = sl2_generators(F);
  const BlockEmbedding embeddings[] = {BlockEmbedding::upper_left(F), BlockEmbedding::lower_right(F),
                                       BlockEmbedding::lower_right_reversed(F)};
  for (ACoord c : G.elements()) {
    const SLAut aut{c.eps, c.r, std::nullopt};
    for (const auto& psi : embeddings)
      for (const auto& x : gens)
        if (apply_slaut(F, aut, psi.embed(F, x)) != psi.embed(F, apply_slaut(F, aut, x))) return false;
  }
  return true;
}

void check_path(const Diagram& d, const GroupPath& p) {
  if (p.letters.size() != p.edges.size() + 1) throw DomainError("path needs one more letter than edges");
  int at = p.start;
  for (auto e : p.edges) {
    if (e.from != at) throw DomainError("path edges do not chain");
    if (!d.adjacent(e.from, e.to)) throw DomainError("path uses a non-edge");
    at = e.to;
  }
}

ACoord beta_along(const CoordGroup&, const std::vector<DirectedEdge>& path, ACoord a) {
  // Across e = (i, j): a in A_i is alpha_e(b) for b in A_e, which equals
  // alpha_rev(e)(b) in A_j.
  for (auto e : path) a = alpha(e.reversed(), alpha_inverse(e, a));
  return a;
}

ACoord beta(const CoordGroup& G, const Diagram& d, int l, int m, ACoord a) {
  // Tree path l -> m through a BFS tree rooted at l.
  std::vector<int> parent(d.size(), -2);
  std::vector<int> queue{l};
  parent[l] = -1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int w : d.neighbors(queue[k]))
      if (parent[w] == -2) {
        parent[w] = queue[k];
        queue.push_back(w);
      }
  if (parent[m] == -2) throw DomainError("vertices lie in different components");
  std::vector<DirectedEdge> path;
  for (int v = m; parent[v] >= 0; v = parent[v]) path.insert(path.begin(), DirectedEdge{parent[v], v});
  return beta_along(G, path, a);
}

NormalForm normal_form(const CoordGroup& G, const GroupPath& p) {
  NormalForm nf;
  nf.edgeword = p.edges;
  for (std::size_t k = 0; k < p.letters.size(); ++k) {
    const std::vector<DirectedEdge> rest(p.edges.begin() + static_cast<long>(k), p.edges.end());
    nf.g = G.add(nf.g, beta_along(G, rest, p.letters[k]));
  }
  return nf;
}

NormalForm normal_form_stepwise(const CoordGroup& G, const GroupPath& p) {
  using Token = std::variant<ACoord, DirectedEdge>;
  std::vector<Token> word;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    word.emplace_back(p.letters[k]);
    word.emplace_back(p.edges[k]);
  }
  word.emplace_back(p.letters.back());

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (std::holds_alternative<ACoord>(word[k]) && std::holds_alternative<ACoord>(word[k + 1])) {
        word[k] = G.add(std::get<ACoord>(word[k]), std::get<ACoord>(word[k + 1]));
        word.erase(word.begin() + static_cast<long>(k) + 1);
        changed = true;
        break;
      }
      if (std::holds_alternative<ACoord>(word[k]) && std::holds_alternative<DirectedEdge>(word[k + 1])) {
        // a e = e alpha_rev(e)(alpha_e^-1(a))
        const ACoord a = std::get<ACoord>(word[k]);
        const DirectedEdge e = std::get<DirectedEdge>(word[k + 1]);
        word[k] = e;
        word[k + 1] = alpha(e.reversed(), alpha_inverse(e, a));
        changed = true;
        break;
      }
    }
  }
  NormalForm nf;
  for (const auto& t : word) {
    if (std::holds_alternative<DirectedEdge>(t))
      nf.edgeword.push_back(std::get<DirectedEdge>(t));
    else
      nf.g = G.add(nf.g, std::get<ACoord>(t));
  }
  return nf;
}

GroupPath reduce_returns(const CoordGroup& G, const GroupPath& p, std::vector<ReturnStep>* trace) {
  GroupPath out;
  out.start = p.start;
  out.letters.push_back(p.letters.front());
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const DirectedEdge e = p.edges[k];
    const ACoord next = p.letters[k + 1];
    if (!out.edges.empty() && out.edges.back() == e.reversed()) {
      // g_{j} e_j g_{j+1} rev(e_j) g_{j+2}  ->  g_j alpha_{e_j}(alpha_{rev}^{-1}(g_{j+1})) g_{j+2}
      const DirectedEdge prev = out.edges.back();
      const ACoord middle = out.letters.back();
      out.edges.pop_back();
      out.letters.pop_back();
      const ACoord before = out.letters.back();
      const ACoord merged = G.add(G.add(before, alpha(prev, alpha_inverse(e, middle))), next);
      out.letters.back() = merged;
      if (trace) trace->push_back({out.edges.size(), merged});
    } else {
      out.edges.push_back(e);
      out.letters.push_back(next);
    }
  }
  return out;
}

std::optional<std::vector<ACoord>> homotopy_witness(const CoordGroup& G, const GroupPath& p1,
                                                    const GroupPath& p2) {
  if (p1.start != p2.start || p1.edges != p2.edges) return std::nullopt;
  const std::size_t n = p1.edges.size();
  if (n == 0) {
    if (p1.letters[0] != p2.letters[0]) return std::nullopt;
    return std::vector<ACoord>{};
  }
  // g'_0 = g_0 - h_1;  g'_k = h_k + g_k - h_{k+1};  g'_n = h_n + g_n
  std::vector<ACoord> h(n);
  h[0] = G.sub(p1.letters[0], p2.letters[0]);
  for (std::size_t k = 1; k < n; ++k)
    h[k] = G.sub(G.add(alpha(p1.edges[k - 1].reversed(), h[k - 1]), p1.letters[k]), p2.letters[k]);
  const ACoord last = G.add(alpha(p1.edges[n - 1].reversed(), h[n - 1]), p1.letters[n]);
  if (last != p2.letters[n]) return std::nullopt;
  return h;
}

ACoord Pointing::at(DirectedEdge e) const {
  auto it = delta_.find(e);
  return it == delta_.end() ? ACoord{} : it->second;
}

void Pointing::set(DirectedEdge e, ACoord a) {
  if (a == ACoord{})
    delta_.erase(e);
  else
    delta_[e] = a;
}

bool Pointing::trivial() const { return delta_.empty(); }

Pointing parse_pointing(std::string_view text, const Diagram& d, const CoordGroup& G) {
  Pointing p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<DirectedEdge, int> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw, a, b;
    if (!(ls >> kw)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    int eps = 0, r = 0;
    std::string extra;
    if (kw != "delta" || !(ls >> a >> b >> eps >> r) || (ls >> extra))
      throw InputError("malformed pointing line '" + line + "'" + where);
    const DirectedEdge e{d.index(a), d.index(b)};
    if (!d.adjacent(e.from, e.to)) throw InputError(a + " " + b + " is not an edge" + where);
    if (seen.count(e)) throw InputError("delta for " + a + " " + b + " given twice" + where);
    seen[e] = lineno;
    p.set(e, G.checked(eps, r));
  }
  return p;
}

Pointing load_pointing(const std::string& path, const Diagram& d, const CoordGroup& G) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pointing file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pointing(buf.str(), d, G);
}

std::string serialize(const Pointing& p, const Diagram& d) {
  std::string s;
  for (const auto& [e, a] : p.values())
    s += "delta " + d.label(e.from) + " " + d.label(e.to) + " " + std::to_string(a.eps) + " " +
         std::to_string(a.r) + "\n";
  return s;
}

GroupPath twisted_cycle(const CoordGroup& G, const Pointing& delta, int base,
                        const std::vector<DirectedEdge>& cycle) {
  GroupPath p;
  p.start = base;
  p.letters.push_back(ACoord{});
  for (auto e : cycle) {
    p.letters.back() = G.add(p.letters.back(), delta.at(e));
    p.edges.push_back(e);
    p.letters.push_back(G.neg(delta.at(e.reversed())));
  }
  return p;
}

ACoord phi_of_cycle(const CoordGroup& G, const Pointing& delta, int base,
                    const std::vector<DirectedEdge>& cycle) {
  return normal_form(G, twisted_cycle(G, delta, base, cycle)).g;
}

ACoord phi_by_summation(const CoordGroup& G, const Pointing& delta, const std::vector<DirectedEdge>& cycle) {
  ACoord s;
  for (auto e : cycle) s = G.add(s, G.sub(delta.at(e), delta.at(e.reversed())));
  return s;
}

std::vector<ACoord> phi_of_pointing(const CoordGroup& G, const Pointing& delta, const SpanningData& sd) {
  std::vector<ACoord> out;
  for (const auto& cycle : sd.cycles) {
    const ACoord via_nf = phi_of_cycle(G, delta, sd.base, cycle);
    if (via_nf != phi_by_summation(G, delta, cycle))
      throw Error("normal form and summation disagree on a cycle");
    out.push_back(via_nf);
  }
  return out;
}

}  // namespace ctam

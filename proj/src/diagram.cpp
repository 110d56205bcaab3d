#include "ctam/diagram.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "ctam/error.hpp"

namespace ctam {

int Diagram::add_vertex(const std::string& label) {
  if (label.empty()) throw InputError("empty vertex label");
  if (find(label)) throw InputError("duplicate vertex '" + label + "'");
  labels_.push_back(label);
  adj_.emplace_back();
  return size() - 1;
}

void Diagram::add_edge(int a, int b) {
  if (a == b) throw InputError("loop at vertex '" + labels_[a] + "'");
  if (adjacent(a, b)) throw InputError("repeated edge " + labels_[a] + " " + labels_[b]);
  edges_.push_back({a, b});
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

std::optional<int> Diagram::find(std::string_view label) const {
  for (int v = 0; v < size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

int Diagram::index(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Diagram::adjacent(int a, int b) const {
  return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
}

bool Diagram::written_as(int a, int b) const {
  return std::find(edges_.begin(), edges_.end(), DirectedEdge{a, b}) != edges_.end();
}

std::vector<int> Diagram::neighbors(int v) const {
  auto out = adj_[v];
  std::sort(out.begin(), out.end(), [&](int x, int y) { return labels_[x] < labels_[y]; });
  return out;
}

std::vector<DirectedEdge> Diagram::directed_edges() const {
  std::vector<DirectedEdge> out;
  for (auto e : edges_) {
    out.push_back(e);
    out.push_back(e.reversed());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Diagram::label_order() const {
  std::vector<int> out(size());
  for (int v = 0; v < size(); ++v) out[v] = v;
  std::sort(out.begin(), out.end(), [&](int x, int y) { return labels_[x] < labels_[y]; });
  return out;
}

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "vertex" && tok.size() == 2) {
      d.add_vertex(tok[1]);
    } else if (tok[0] == "edge" && tok.size() == 3) {
      auto a = d.find(tok[1]);
      auto b = d.find(tok[2]);
      if (!a || !b) throw InputError("edge names an undeclared vertex" + where);
      try {
        d.add_edge(*a, *b);
      } catch (const InputError& e) {
        throw InputError(e.what() + where);
      }
    } else {
      throw InputError("malformed diagram line '" + line + "'" + where);
    }
  }
  if (d.size() == 0) throw InputError("diagram has no vertices");
  return d;
}

std::string serialize(const Diagram& d) {
  std::string s;
  for (const auto& l : d.labels()) s += "vertex " + l + "\n";
  for (auto e : d.edges()) s += "edge " + d.label(e.from) + " " + d.label(e.to) + "\n";
  return s;
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open diagram file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::uint64_t diagram_hash(const Diagram& d) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize(d)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

AdmissibilityReport check_admissible(const Diagram& d) {
  AdmissibilityReport rep;
  std::vector<int> comp(d.size(), -1);
  for (int s = 0; s < d.size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(rep.components.size());
    rep.components.emplace_back();
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      rep.components[id].push_back(v);
      for (int w : d.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push_back(w);
        }
    }
  }
  if (rep.components.size() > 1) {
    rep.ok = false;
    rep.violation = "disconnected: " + std::to_string(rep.components.size()) + " components";
    return rep;
  }
  rep.components.clear();
  for (auto e : d.edges())
    for (int w : d.neighbors(e.from))
      if (w != e.to && d.adjacent(w, e.to)) {
        rep.ok = false;
        rep.triangle = {e.from, e.to, w};
        rep.violation = "circuit of length 3: " + d.label(e.from) + " " + d.label(e.to) + " " + d.label(w);
        return rep;
      }
  return rep;
}

std::vector<DirectedEdge> SpanningData::path_from_base(int v) const {
  std::vector<DirectedEdge> path;
  while (parent[v] >= 0) {
    path.push_back({parent[v], v});
    v = parent[v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningData spanning_structure(const Diagram& d, int base) {
  const auto adm = check_admissible(d);
  if (!adm.ok) throw DomainError("diagram is not admissible: " + adm.violation);
  if (base < 0 || base >= d.size()) throw DomainError("base vertex out of range");

  SpanningData sd;
  sd.base = base;
  sd.parent.assign(d.size(), -1);
  sd.bfs_rank.assign(d.size(), -1);
  std::deque<int> q{base};
  sd.bfs_rank[base] = 0;
  int next = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : d.neighbors(v))
      if (sd.bfs_rank[w] < 0) {
        sd.bfs_rank[w] = next++;
        sd.parent[w] = v;
        sd.tree.push_back({v, w});
        q.push_back(w);
      }
  }

  for (auto e : d.edges()) {
    if (sd.parent[e.to] == e.from || sd.parent[e.from] == e.to) continue;
    sd.extra.push_back(sd.bfs_rank[e.from] < sd.bfs_rank[e.to] ? e : e.reversed());
  }
  std::sort(sd.extra.begin(), sd.extra.end(), [&](DirectedEdge x, DirectedEdge y) {
    return std::pair(d.label(x.from), d.label(x.to)) < std::pair(d.label(y.from), d.label(y.to));
  });

  for (auto e : sd.extra) {
    auto cycle = sd.path_from_base(e.from);
    cycle.push_back(e);
    auto back = sd.path_from_base(e.to);
    for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(it->reversed());
    sd.cycles.push_back(std::move(cycle));
  }
  return sd;
}

SpanningData spanning_structure(const Diagram& d) { return spanning_structure(d, 0); }

int cycle_rank_gf2(const Diagram& d) {
  // |E| minus the rank of the vertex-edge incidence matrix over GF(2).
  const int n = d.size();
  std::vector<std::vector<std::uint8_t>> rows;
  for (auto e : d.edges()) {
    std::vector<std::uint8_t> r(n, 0);
    r[e.from] = r[e.to] = 1;
    rows.push_back(r);
  }
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
    int piv = rank;
    while (piv < static_cast<int>(rows.size()) && !rows[piv][c]) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[piv], rows[rank]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && rows[i][c])
        for (int j = 0; j < n; ++j) rows[i][j] ^= rows[rank][j];
    ++rank;
  }
  return static_cast<int>(rows.size()) - rank;
}

std::string describe(const Diagram& d, const SpanningData& sd) {
  std::string s = "base " + d.label(sd.base) + "; tree";
  for (auto e : sd.tree) s += " " + d.label(e.from) + "-" + d.label(e.to);
  s += "; H";
  for (auto e : sd.extra) s += " " + d.label(e.from) + "->" + d.label(e.to);
  return s;
}

}  // namespace ctam

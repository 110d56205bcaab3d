#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctam {

/// Edge (from, to) between vertex indices; indices follow file order.
struct DirectedEdge {
  int from = 0;
  int to = 0;

  DirectedEdge reversed() const { return {to, from}; }
  friend constexpr bool operator==(DirectedEdge, DirectedEdge) = default;
  friend constexpr auto operator<=>(DirectedEdge, DirectedEdge) = default;
};

/// Simple undirected graph on labelled vertices. Each edge also remembers the
/// orientation it was written with ("edge a b" puts a in the upper-left block
/// of the edge group).
class Diagram {
 public:
  int add_vertex(const std::string& label);
  void add_edge(int a, int b);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  int index(std::string_view label) const;

  /// Edges as written in the file, in file order.
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  /// True if {a, b} is an edge written as "edge a b".
  bool written_as(int a, int b) const;
  /// Neighbours of v in label order.
  std::vector<int> neighbors(int v) const;
  /// Both orientations of every edge, sorted.
  std::vector<DirectedEdge> directed_edges() const;
  /// Vertex indices sorted by label.
  std::vector<int> label_order() const;

 private:
  std::vector<std::string> labels_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Line format: "vertex <label>", "edge <label> <label>", "#" comments.
/// Throws InputError on malformed lines, unknown labels, loops and repeated
/// edges.
Diagram parse_diagram(std::string_view text);
std::string serialize(const Diagram& d);
Diagram load_diagram(const std::string& path);

/// FNV-1a of the serialized form.
std::uint64_t diagram_hash(const Diagram& d);

struct AdmissibilityReport {
  bool ok = true;
  std::string violation;
  std::vector<int> triangle;                 // offending circuit of length 3
  std::vector<std::vector<int>> components;  // when disconnected
};

/// Connected and without circuits of length <= 3.
AdmissibilityReport check_admissible(const Diagram& d);

struct SpanningData {
  int base = 0;
  std::vector<int> parent;       // -1 at the base
  std::vector<int> bfs_rank;     // visiting position
  std::vector<DirectedEdge> tree;  // (parent, child) in BFS order
  std::vector<DirectedEdge> extra;  // H
  std::vector<std::vector<DirectedEdge>> cycles;  // one closed walk at base per H-edge

  /// Tree path from the base to v.
  std::vector<DirectedEdge> path_from_base(int v) const;
};

/// Throws DomainError if d is not admissible.
SpanningData spanning_structure(const Diagram& d, int base);
SpanningData spanning_structure(const Diagram& d);

/// Dimension of the cycle space via GF(2) elimination on the incidence
/// matrix; independent of the spanning tree.
int cycle_rank_gf2(const Diagram& d);

/// Human-readable "a-b,b-c | H: c->d" description used in reports.
std::string describe(const Diagram& d, const SpanningData& sd);

}  // namespace ctam

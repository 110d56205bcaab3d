#include <algorithm>
#include <set>

#include "doctest.h"

#include "ctam/diagram.hpp"
#include "ctam/error.hpp"

using namespace ctam;

namespace {

Diagram data(const std::string& name) { return load_diagram(std::string(CTAM_TEST_DATA) + "/" + name); }

bool is_tree_edge(const SpanningData& sd, DirectedEdge e) {
  for (auto t : sd.tree)
    if (t == e || t == e.reversed()) return true;
  return false;
}

void check_cycles(const Diagram& d, const SpanningData& sd) {
  REQUIRE(sd.cycles.size() == sd.extra.size());
  for (std::size_t k = 0; k < sd.cycles.size(); ++k) {
    const auto& c = sd.cycles[k];
    REQUIRE_FALSE(c.empty());
    CHECK(c.front().from == sd.base);
    CHECK(c.back().to == sd.base);
    int extra_uses = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(d.adjacent(c[i].from, c[i].to));
      if (i + 1 < c.size()) CHECK(c[i].to == c[i + 1].from);
      if (c[i] == sd.extra[k]) {
        ++extra_uses;
      } else {
        CHECK(is_tree_edge(sd, c[i]));
      }
    }
    CHECK(extra_uses == 1);
  }
}

}  // namespace

TEST_CASE("parsing keeps file order and written orientation") {
  const Diagram d = parse_diagram("# comment\nvertex x\nvertex y\n\nvertex z\nedge y x\nedge y z\n");
  CHECK(d.size() == 3);
  CHECK(d.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(d.written_as(1, 0));
  CHECK_FALSE(d.written_as(0, 1));
  CHECK(d.adjacent(0, 1));
  CHECK_FALSE(d.adjacent(0, 2));
  CHECK(d.neighbors(1) == std::vector<int>{0, 2});
  CHECK(parse_diagram(serialize(d)).edges() == d.edges());
  CHECK(diagram_hash(parse_diagram(serialize(d))) == diagram_hash(d));
  CHECK(diagram_hash(d) != diagram_hash(parse_diagram("vertex x\nvertex y\nvertex z\nedge x y\nedge y z\n")));
}

TEST_CASE("malformed diagrams are input errors") {
  CHECK_THROWS_AS(parse_diagram("vertex a\nedge a b\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("vertex a\nvertex a\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("vertex a\nedge a a\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("vertex a\nvertex b\nedge a b\nedge b a\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("vertex a\nnode b\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("vertex a\nedge a\n"), InputError);
  CHECK_THROWS_AS(parse_diagram(""), InputError);
  CHECK_THROWS_AS(load_diagram("/nonexistent/file.dgm"), InputError);
}

TEST_CASE("admissibility") {
  CHECK(check_admissible(data("c4.dgm")).ok);
  CHECK(check_admissible(data("theta.dgm")).ok);
  CHECK(check_admissible(parse_diagram("vertex a\n")).ok);
  const auto tri = check_admissible(data("triangle.dgm"));
  CHECK_FALSE(tri.ok);
  CHECK(tri.triangle.size() == 3);
  const auto dis = check_admissible(data("disjoint.dgm"));
  CHECK_FALSE(dis.ok);
  CHECK(dis.components.size() == 2);
  CHECK_THROWS_AS(spanning_structure(data("triangle.dgm")), DomainError);
  CHECK_THROWS_AS(spanning_structure(data("disjoint.dgm")), DomainError);
}

TEST_CASE("spanning structure of the 4-cycle") {
  const Diagram d = data("c4.dgm");
  const auto sd = spanning_structure(d);
  CHECK(sd.base == 0);
  CHECK(sd.tree.size() == 3);
  CHECK(sd.extra.size() == 1);
  CHECK(describe(d, sd) == "base 1; tree 1-2 1-4 2-3; H 4->3");
  CHECK(sd.path_from_base(2) == std::vector<DirectedEdge>{{0, 1}, {1, 2}});
  CHECK(sd.path_from_base(0).empty());
  check_cycles(d, sd);
  CHECK(sd.cycles[0] == std::vector<DirectedEdge>{{0, 3}, {3, 2}, {2, 1}, {1, 0}});
}

TEST_CASE("spanning structure of the theta graph") {
  const Diagram d = data("theta.dgm");
  const auto sd = spanning_structure(d);
  CHECK(static_cast<int>(sd.extra.size()) == cycle_rank_gf2(d));
  CHECK(sd.extra.size() == 2);
  CHECK(describe(d, sd) == "base s; tree s-a s-b s-c a-t c-d; H b->t t->d");
  check_cycles(d, sd);
  // Any base gives a tree with the same number of extra edges.
  for (int b = 0; b < d.size(); ++b) {
    const auto other = spanning_structure(d, b);
    CHECK(other.extra.size() == 2);
    check_cycles(d, other);
  }
  CHECK(cycle_rank_gf2(data("c6.dgm")) == 1);
  CHECK(cycle_rank_gf2(data("a4.dgm")) == 0);
}

TEST_CASE("spanning structure depends only on the diagram text") {
  for (const char* name : {"c4.dgm", "c5.dgm", "c6.dgm", "theta.dgm", "a4.dgm"}) {
    const Diagram d = data(name);
    const auto a = spanning_structure(d);
    const auto b = spanning_structure(parse_diagram(serialize(d)));
    CHECK(a.tree == b.tree);
    CHECK(a.extra == b.extra);
    CHECK(a.cycles == b.cycles);
    CHECK(describe(d, a) == describe(d, b));
    // BFS ranks are consistent with parents.
    for (int v = 0; v < d.size(); ++v)
      if (a.parent[v] >= 0) CHECK(a.bfs_rank[a.parent[v]] < a.bfs_rank[v]);
    for (auto e : a.extra) CHECK(a.bfs_rank[e.from] < a.bfs_rank[e.to]);
  }
}

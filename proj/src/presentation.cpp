#include "ctam/presentation.hpp"

#include <sstream>

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"

namespace ctam {

Presentation to_presentation(const CTAmalgam& A) {
  Presentation P{A.field, A.convention, A.diagram, sl2_generators(A.field), {}, {}, non_edges(A.diagram)};
  for (const auto& [e, inc] : A.inclusions) {
    P.twists[e] = inc.twist;
    P.images[e] = A.include_all(e, P.generators);
  }
  return P;
}

std::string format(const Presentation& P) {
  const Field& F = P.field;
  const Diagram& d = P.diagram;
  std::string s = "FIELD " + F.name() + "\n";
  s += std::string("CONVENTION ") + (P.convention == BlockConvention::natural ? "natural" : "reversed") + "\n";
  for (std::size_t k = 0; k < P.generators.size(); ++k)
    s += "GEN " + std::to_string(k) + " " + format(F, P.generators[k]) + "\n";
  for (const auto& l : d.labels()) s += "VERTEX " + l + "\n";
  for (auto e : d.edges()) {
    s += "EDGE " + d.label(e.from) + " " + d.label(e.to) + "\n";
    for (auto de : {e, e.reversed()}) {
      const ACoord t = P.twists.at(de);
      s += "TWIST " + d.label(de.from) + " " + d.label(de.to) + " " + std::to_string(t.eps) + " " +
           std::to_string(t.r) + "\n";
    }
    for (auto de : {e, e.reversed()}) {
      const auto& imgs = P.images.at(de);
      for (std::size_t k = 0; k < imgs.size(); ++k)
        s += "IMAGE " + d.label(de.from) + " " + d.label(de.to) + " " + std::to_string(k) + " " +
             format(F, imgs[k]) + "\n";
    }
  }
  for (auto [i, j] : P.nonedges) s += "NONEDGE " + d.label(i) + " " + d.label(j) + "\n";
  return s;
}

std::string emit_presentation(const CTAmalgam& A) { return format(to_presentation(A)); }

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!tok.empty()) lines.push_back(std::move(tok));
  }
  if (lines.empty() || lines[0][0] != "FIELD" || lines[0].size() != 2)
    throw InputError("presentation must start with FIELD");
  Presentation P{Field::parse(lines[0][1]), BlockConvention::natural, {}, {}, {}, {}, {}};
  const Field& F = P.field;
  const CoordGroup G(F);

  auto to_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw InputError("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + s + "'");
    }
  };
  auto edge_of = [&](const std::string& a, const std::string& b) {
    const DirectedEdge e{P.diagram.index(a), P.diagram.index(b)};
    if (!P.diagram.adjacent(e.from, e.to)) throw InputError(a + " " + b + " is not an edge");
    return e;
  };

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& t = lines[k];
    const std::string& kw = t[0];
    if (kw == "CONVENTION" && t.size() == 2) {
      if (t[1] == "natural")
        P.convention = BlockConvention::natural;
      else if (t[1] == "reversed")
        P.convention = BlockConvention::reversed;
      else
        throw InputError("unknown convention '" + t[1] + "'");
    } else if (kw == "GEN" && t.size() == 3) {
      if (to_int(t[1]) != static_cast<int>(P.generators.size())) throw InputError("generators out of order");
      P.generators.push_back(parse_mat(F, t[2]));
    } else if (kw == "VERTEX" && t.size() == 2) {
      P.diagram.add_vertex(t[1]);
    } else if (kw == "EDGE" && t.size() == 3) {
      P.diagram.add_edge(P.diagram.index(t[1]), P.diagram.index(t[2]));
    } else if (kw == "TWIST" && t.size() == 5) {
      P.twists[edge_of(t[1], t[2])] = G.checked(to_int(t[3]), to_int(t[4]));
    } else if (kw == "IMAGE" && t.size() == 5) {
      auto& imgs = P.images[edge_of(t[1], t[2])];
      if (to_int(t[3]) != static_cast<int>(imgs.size())) throw InputError("images out of order");
      imgs.push_back(parse_mat(F, t[4]));
    } else if (kw == "NONEDGE" && t.size() == 3) {
      P.nonedges.emplace_back(P.diagram.index(t[1]), P.diagram.index(t[2]));
    } else {
      throw InputError("malformed presentation line starting '" + kw + "'");
    }
  }
  return P;
}

CheckReport verify_presentation(const Presentation& P) {
  const Field& F = P.field;
  const Diagram& d = P.diagram;
  CheckReport rep;
  const std::size_t sl2_order = sl2_elements(F).size();

  for (auto e : d.edges()) {
    const std::string name = d.label(e.from) + "-" + d.label(e.to);
    auto a = P.images.find(e);
    auto b = P.images.find(e.reversed());
    if (a == P.images.end() || b == P.images.end() || a->second.size() != P.generators.size() ||
        b->second.size() != P.generators.size()) {
      rep.add("images " + name, false, "missing generator images");
      continue;
    }
    rep.add("CT2 " + name, is_standard_pair(F, a->second, b->second).has_value());
    for (const auto* imgs : {&a->second, &b->second}) {
      bool dets = true;
      for (const auto& m : *imgs) dets = dets && m.dim() == 3 && det(F, m) == F.one();
      const bool order = closure(F, *imgs).size() == sl2_order;
      rep.add("image " + name, dets && order, dets ? "" : "determinant not 1");
    }
  }

  auto expected = non_edges(d);
  rep.add("non-edges", expected == P.nonedges);

  Pointing delta;
  for (const auto& [e, t] : P.twists) delta.set(e, t);
  bool agrees = false;
  try {
    const CTAmalgam A = build_amalgam(d, delta, F, P.convention);
    agrees = to_presentation(A).images == P.images && sl2_generators(F) == P.generators;
  } catch (const Error&) {
  }
  rep.add("rebuild agrees", agrees);
  return rep;
}

}  // namespace ctam

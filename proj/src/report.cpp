#include "ctam/report.hpp"

#include <cstdio>
#include <random>

#include "ctam/amalgam.hpp"
#include "ctam/classifier.hpp"
#include "ctam/completion.hpp"
#include "ctam/error.hpp"

namespace ctam {

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json pointing_json(const Pointing& p, const Diagram& d) {
  Json arr = Json::array();
  for (const auto& [e, a] : p.values())
    arr.push_back(Json{{"from", d.label(e.from)}, {"to", d.label(e.to)}, {"eps", a.eps}, {"r", a.r}});
  return arr;
}

Json phi_json(const std::vector<ACoord>& phi, const Diagram& d, const SpanningData& sd) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < phi.size(); ++k)
    arr.push_back(Json{{"edge", d.label(sd.extra[k].from) + "->" + d.label(sd.extra[k].to)},
                       {"eps", phi[k].eps},
                       {"r", phi[k].r}});
  return arr;
}

Json checks_json(const CheckReport& rep) {
  Json arr = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

void require_field(const Field& F) {
  if (F.order() < 4) throw DomainError("GF(" + F.name() + ") has fewer than 4 elements");
}

}  // namespace

Json report_header(const std::string& command, const Field& F, const Diagram& d, const SpanningData& sd) {
  return Json{{"tool", "ctam"},
              {"version", kToolVersion},
              {"command", command},
              {"field", F.name()},
              {"diagram_hash", hex64(diagram_hash(d))},
              {"vertices", d.size()},
              {"edges", d.edges().size()},
              {"spanning_tree", describe(d, sd)}};
}

RunResult classify_command(const Diagram& d, const Field& F) {
  require_field(F);
  const auto sd = spanning_structure(d);
  const auto classes = enumerate_classes(d, F, sd);
  RunResult res;
  res.report = report_header("classify", F, d, sd);
  Json arr = Json::array();
  std::size_t orientable = 0;
  for (const auto& c : classes) {
    orientable += c.orientable;
    arr.push_back(Json{{"key", class_key(c.phi)},
                       {"phi", phi_json(c.phi, d, sd)},
                       {"orientable", c.orientable},
                       {"canonical_pointing", pointing_json(c.canonical, d)}});
  }
  res.report["classes"] = arr;
  res.report["totals"] = Json{{"betti", sd.extra.size()},
                              {"classes", classes.size()},
                              {"orientable", orientable},
                              {"gf2_cycle_rank", cycle_rank_gf2(d)}};
  res.verified = cycle_rank_gf2(d) == static_cast<int>(sd.extra.size());
  return res;
}

RunResult verify_command(const Diagram& d, const Pointing& delta, const Field& F) {
  require_field(F);
  const auto sd = spanning_structure(d);
  const CoordGroup G(F);
  const CTAmalgam A = build_amalgam(d, delta, F);
  RunResult res;
  res.report = report_header("verify", F, d, sd);
  res.report["pointing"] = pointing_json(delta, d);

  const auto phi = phi_of_pointing(G, delta, sd);
  res.report["phi"] = phi_json(phi, d, sd);
  res.report["class_key"] = class_key(phi);

  const bool alpha_ok = alpha_matrix_check(F);
  res.report["alpha_matrix_check"] = alpha_ok;

  const auto ct = verify_ct_axioms(A);
  res.report["ct_axioms"] = Json{{"ok", ct.ok}, {"checks", checks_json(ct)}};

  Json tori = Json::array();
  bool tori_ok = true;
  if (F.order() <= 9) {
    for (int v = 0; v < d.size(); ++v) {
      if (d.neighbors(v).empty()) continue;
      const auto t = compute_Di(A, v);
      tori_ok = tori_ok && t.edge_independent && t.ij_torus_ok;
      tori.push_back(Json{{"vertex", d.label(v)},
                          {"order", t.torus.size()},
                          {"edge_independent", t.edge_independent},
                          {"ij_torus", t.ij_torus_ok}});
    }
  }
  res.report["tori"] = tori;

  const auto orient = orientation_search(A);
  const bool predicted = is_orientable_phi(phi);
  Json oj{{"found", orient.witness.has_value()},
          {"assignments_tried", orient.assignments_tried},
          {"predicted_by_phi", predicted}};
  if (orient.witness) {
    Json signs = Json::object();
    for (int v = 0; v < d.size(); ++v) signs[d.label(v)] = orient.witness->sign[v] > 0 ? "+" : "-";
    oj["signs"] = signs;
    Json certs = Json::array();
    for (const auto& [e, c] : orient.witness->certificates)
      certs.push_back(Json{{"edge", d.label(e.from) + "-" + d.label(e.to)}, {"unipotent_order", c.order}});
    oj["borel_certificates"] = certs;
  }
  res.report["orientation"] = oj;

  res.verified = alpha_ok && ct.ok && tori_ok && orient.witness.has_value() == predicted;
  return res;
}

RunResult oracle_command(const Diagram& d, const Field& F, std::uint64_t seed) {
  require_field(F);
  const auto sd = spanning_structure(d);
  const CoordGroup G(F);
  std::mt19937_64 rng(seed);
  RunResult res;
  res.report = report_header("oracle", F, d, sd);
  res.report["seed"] = seed;

  const std::size_t pointing_pairs = 200;
  const std::size_t matrix_pairs = d.size() <= 6 ? 20 : 0;
  const auto coords = G.elements();

  auto random_phi = [&] {
    std::vector<ACoord> phi;
    for (std::size_t k = 0; k < sd.extra.size(); ++k) phi.push_back(coords[rng() % coords.size()]);
    return phi;
  };

  std::size_t mismatches = 0, matrix_mismatches = 0, same_found = 0, cross_found = 0;
  std::size_t pairs_run = 0, matrix_run = 0;
  for (int same = 1; same >= 0; --same) {
    if (!same && sd.extra.empty()) continue;  // every pointing on a tree is trivial up to isomorphism
    for (std::size_t k = 0; k < pointing_pairs; ++k) {
      const Pointing d1 = random_pointing(G, d, rng);
      Pointing d2 = random_pointing(G, d, rng);
      const auto phi1 = phi_of_pointing(G, d1, sd);
      if (same) {
        d2 = with_phi(G, d2, sd, phi1);
      } else {
        auto phi2 = random_phi();
        while (phi2 == phi1) phi2 = random_phi();
        d2 = with_phi(G, d2, sd, phi2);
      }
      const bool by_phi = pointings_isomorphic(G, d1, d2, sd);
      const bool by_oracle = oracle_pointing_iso(G, d, d1, d2).has_value();
      ++pairs_run;
      if (by_oracle) (same ? same_found : cross_found) += 1;
      if (by_phi != by_oracle) ++mismatches;
      if (k < matrix_pairs) {
        const auto a1 = build_amalgam(d, d1, F);
        const auto a2 = build_amalgam(d, d2, F);
        const auto mw = oracle_matrix_iso(a1, a2);
        ++matrix_run;
        bool agree = mw.has_value() == by_oracle;
        if (mw) agree = agree && verify_iso_witness(G, d, d2, d1, project(*mw));
        if (!agree) ++matrix_mismatches;
      }
    }
  }
  res.report["pointing_oracle"] = Json{{"pairs", pairs_run},
                                       {"same_class_witnessed", same_found},
                                       {"cross_class_witnessed", cross_found},
                                       {"mismatches", mismatches}};
  res.report["matrix_oracle"] = Json{{"pairs", matrix_run}, {"mismatches", matrix_mismatches}};
  res.verified = mismatches == 0 && matrix_mismatches == 0;
  return res;
}

RunResult complete_command(const Diagram& d, const Pointing& delta, const Field& F) {
  require_field(F);
  const auto sd = spanning_structure(d);
  const CTAmalgam A = build_amalgam(d, delta, F);
  RunResult res;
  res.report = report_header("complete", F, d, sd);

  std::optional<CompletionWitness> w;
  std::string kind = "none";
  if (delta.trivial() && walk_order(d, false)) {
    w = spherical_completion(A);
    kind = "spherical";
  } else if (delta.trivial() && d.size() >= 4 && walk_order(d, true)) {
    w = affine_completion(A);
    kind = "affine";
  }
  res.report["witness"] = kind;
  if (!w) {
    res.report["status"] = "no witness available";
    return res;
  }
  res.report["target"] = Json{{"dimension", w->n}, {"ring", w->laurent ? "GF(q)[t,t^-1]" : "GF(q)"}};
  const auto rep = verify_completion(A, *w);
  res.report["checks"] = checks_json(rep);
  bool ok = rep.ok;
  if (w->laurent) {
    const auto at_one = verify_completion(A, *w, F.one());
    res.report["evaluation_t_1"] = at_one.ok;
    ok = ok && at_one.ok;
  }
  res.report["status"] = ok ? "verified" : "failed";
  res.verified = ok;
  return res;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ctam

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctam/amalgam.hpp"
#include "ctam/diagram.hpp"
#include "ctam/field.hpp"
#include "ctam/path_group.hpp"

namespace ctam {

struct IsoClass {
  std::vector<ACoord> phi;  // one value per H-edge, in SpanningData order
  bool orientable = true;
  Pointing canonical;       // supported on H only
};

/// Uniform random value on every directed edge.
Pointing random_pointing(const CoordGroup& G, const Diagram& d, std::mt19937_64& rng);
/// Changes delta only on H-edges so that its Phi becomes target.
Pointing with_phi(const CoordGroup& G, const Pointing& delta, const SpanningData& sd,
                  const std::vector<ACoord>& target);

/// Concatenated "(eps,r)" per H-edge.
std::string class_key(const std::vector<ACoord>& phi);

/// Pointing with delta_e = phi(e) on each H-edge and zero elsewhere.
Pointing canonical_pointing(const SpanningData& sd, const std::vector<ACoord>& phi);

/// All (2m)^|H| classes, lexicographic in H-edge order and coordinate order.
/// Throws DomainError for inadmissible diagrams or fields with fewer than 4
/// elements.
std::vector<IsoClass> enumerate_classes(const Diagram& d, const Field& F);
std::vector<IsoClass> enumerate_classes(const Diagram& d, const Field& F, const SpanningData& sd);

bool is_orientable_phi(const IsoClass& c);
bool is_orientable_phi(const std::vector<ACoord>& phi);

bool pointings_isomorphic(const CoordGroup& G, const Pointing& d1, const Pointing& d2, const SpanningData& sd);

/// a_i per vertex and a_{i,j} = a_{j,i} per edge, keyed by the written edge.
struct IsoWitness {
  std::vector<ACoord> vertex;
  std::map<DirectedEdge, ACoord> edge;
};

/// delta1_{i,j} + a_{i,j} = a_i + delta2_{i,j} on every directed edge.
bool verify_iso_witness(const CoordGroup& G, const Diagram& d, const Pointing& d1, const Pointing& d2,
                        const IsoWitness& w);

struct SearchStats {
  std::size_t nodes = 0;
};

inline constexpr std::size_t kOracleBudget = 50'000'000;

/// Exhaustive backtracking over vertex assignments; each a_{i,j} is forced by
/// its directed-edge equation and the two directions must agree. The
/// returned witness is re-verified. Throws BudgetExceeded past the budget.
std::optional<IsoWitness> oracle_pointing_iso(const CoordGroup& G, const Diagram& d, const Pointing& d1,
                                              const Pointing& d2, SearchStats* stats = nullptr,
                                              std::size_t budget = kOracleBudget);

/// Per-vertex and per-edge coordinate automorphisms, realized as semilinear
/// maps on SL_2 and SL_3.
struct MatrixIsoWitness {
  std::vector<ACoord> vertex;
  std::map<DirectedEdge, ACoord> edge;
};

/// Searches phi_i in A_i, phi_{i,j} in A_{i,j} with
/// phi_{i,j} o phi^1_{i,j} = phi^2_{i,j} o phi_i on SL_2 generators, using
/// matrices only. |I| <= 6.
std::optional<MatrixIsoWitness> oracle_matrix_iso(const CTAmalgam& a1, const CTAmalgam& a2);

/// Re-checks the matrix squares for a witness.
bool verify_matrix_witness(const CTAmalgam& a1, const CTAmalgam& a2, const MatrixIsoWitness& w);

/// The coordinates of a matrix witness a1 -> a2 form a pointing isomorphism
/// from delta2 to delta1.
IsoWitness project(const MatrixIsoWitness& w);

}  // namespace ctam

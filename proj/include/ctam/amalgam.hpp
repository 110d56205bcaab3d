#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctam/diagram.hpp"
#include "ctam/field.hpp"
#include "ctam/matrix.hpp"
#include "ctam/path_group.hpp"
#include "ctam/standard_pair.hpp"

namespace ctam {

/// How the second vertex of an edge sits in the edge group SL_3.
enum class BlockConvention {
  natural,   // (f1, f2) -> (e2, e3)
  reversed,  // (f1, f2) -> (e3, e2)
};

/// phi = block o twist^-1, with the twist acting on SL_2 as omega^eps sigma^r.
struct Inclusion {
  BlockEmbedding block;
  ACoord twist;
};

/// Concrete amalgam: vertex groups SL_2(q), edge groups SL_3(q) indexed by
/// the edge as written in the diagram, one inclusion per directed edge.
struct CTAmalgam {
  Field field;
  Diagram diagram;
  Pointing pointing;
  BlockConvention convention = BlockConvention::natural;
  std::map<DirectedEdge, Inclusion> inclusions;

  /// phi_{i,j}(x) for e = (i, j).
  Mat include(DirectedEdge e, const Mat& x) const;
  std::vector<Mat> include_all(DirectedEdge e, const std::vector<Mat>& xs) const;
  /// Whether m lies in the image of phi_e.
  bool in_image(DirectedEdge e, const Mat& m) const;
};

/// Throws DomainError for an inadmissible diagram, a field with fewer than 4
/// elements, or an amalgam that fails its own axiom check.
CTAmalgam build_amalgam(const Diagram& d, const Pointing& delta, const Field& F,
                        BlockConvention convention = BlockConvention::natural);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct CheckReport {
  bool ok = true;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {});
};

/// Element of G_i * G_j: a pair modulo simultaneous negation.
struct CentralPair {
  Mat left, right;
  friend bool operator==(const CentralPair&, const CentralPair&) = default;
};
CentralPair central_normalize(const Field& F, CentralPair x);
CentralPair central_mul(const Field& F, const CentralPair& x, const CentralPair& y);

std::vector<std::pair<int, int>> non_edges(const Diagram& d);

/// CT2 on every edge, inclusions are injective homomorphisms carrying the
/// edge coordinates onto the vertex coordinates, and non-edge groups commute
/// in the central product.
CheckReport verify_ct_axioms(const CTAmalgam& A);

struct TorusReport {
  std::vector<Mat> torus;                       // D_i inside G_i, sorted
  std::map<int, std::vector<Mat>> per_neighbor;  // pullback through each edge
  bool edge_independent = true;
  bool ij_torus_ok = true;
  std::string detail;
};

/// Elements x of G_from(e) whose image under phi_e normalizes the image of
/// phi_rev(e). Exhaustive over SL_2(q), q <= 9.
std::vector<Mat> normalizer_pullback(const CTAmalgam& A, DirectedEdge e);

/// D_i through every edge at i, edge independence and the common diagonal
/// torus of each edge group.
TorusReport compute_Di(const CTAmalgam& A, int i);

struct OrientationWitness {
  std::vector<int> sign;  // +1 selects the upper root group, -1 the lower
  std::map<DirectedEdge, BorelCertificate> certificates;  // per written edge
};

struct OrientationResult {
  std::optional<OrientationWitness> witness;
  std::size_t assignments_tried = 0;
};

/// Exhaustive over all 2^|I| sign choices (|I| <= 16), in lexicographic order
/// with + before - and the first vertex most significant. An edge accepts a
/// choice when the two image root groups are the simple root groups of a
/// common Borel subgroup of the edge group.
OrientationResult orientation_search(const CTAmalgam& A);

/// Diagonal automorphism conj(diag(a, b)) of one vertex group.
struct DiagonalSpec {
  Elem a, b;
};

struct ExtensionReport {
  bool ok = true;
  std::map<DirectedEdge, Mat> edge_maps;  // tau_{i,j} per written edge
  CheckReport checks;
};

/// Extends per-vertex diagonal automorphisms to every edge group with
/// diag(ac, bc, bd) and to non-edge central products, and checks that the
/// family commutes with every inclusion.
ExtensionReport apply_diagonal_extension(const CTAmalgam& A, const std::vector<DiagonalSpec>& tau);

}  // namespace ctam

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ctam/field.hpp"
#include "ctam/matrix.hpp"

namespace ctam {

using MatSet = std::unordered_set<Mat, MatHash>;

inline constexpr std::size_t kClosureCap = 100000;

/// Subgroup generated by gens (breadth-first). Throws BudgetExceeded past cap.
MatSet closure(const Field& F, const std::vector<Mat>& gens, std::size_t cap = kClosureCap);

struct BorelCertificate {
  bool unipotent = false;
  std::size_t order = 0;  // of the generated subgroup, 0 if the cap was hit
  bool budget_exceeded = false;
};

/// Whether <U1, U2> is unipotent, i.e. lies in a common Borel subgroup.
/// Hitting the closure cap counts as "no".
BorelCertificate common_borel(const Field& F, const std::vector<Mat>& u1_gens,
                              const std::vector<Mat>& u2_gens);

/// Stronger test used for orientations in SL_3: the two groups generate the
/// full unipotent radical of a Borel (unipotent of order q^3), so they are
/// the two simple root groups of that Borel.
bool simple_root_pair(const Field& F, const BorelCertificate& cert);

/// SL_2 -> SL_3, M -> B * diag(M, 1) * B^-1. The columns of B are the images
/// of f1, f2 and of the fixed vector.
struct BlockEmbedding {
  Mat basis;

  static BlockEmbedding upper_left(const Field& F);
  /// (f1, f2) -> (e2, e3), fixing e1.
  static BlockEmbedding lower_right(const Field& F);
  /// (f1, f2) -> (e3, e2), fixing e1.
  static BlockEmbedding lower_right_reversed(const Field& F);

  Mat embed(const Field& F, const Mat& m) const;
  /// Preimage of an SL_3 matrix, or nullopt if it is not in the image.
  std::optional<Mat> extract(const Field& F, const Mat& m) const;
};

struct StandardPairWitness {
  Vec e1, e2, e3;
  std::vector<Vec> u1, v1, u2, v2;
};

/// Decides whether the groups generated by s1_gens and s2_gens (in SL_3) form
/// a standard pair, reading the fixed lines and invariant planes off the
/// generators.
std::optional<StandardPairWitness> is_standard_pair(const Field& F, const std::vector<Mat>& s1_gens,
                                                    const std::vector<Mat>& s2_gens);

/// Fixed line and moved plane of an SL_2 block subgroup given by generators.
std::vector<Vec> fixed_space(const Field& F, const std::vector<Mat>& gens);
std::vector<Vec> moved_space(const Field& F, const std::vector<Mat>& gens);
bool preserves(const Field& F, const Mat& g, const std::vector<Vec>& space);

/// diag(a, a^-1, 1) for a primitive element a.
Mat standard_d1_generator(const Field& F);

/// Eigenlines of a diagonalizable 3x3 matrix with three distinct eigenvalues.
/// Throws DomainError when the eigenvalues are not distinct (|k| < 4 for the
/// standard torus generator).
std::vector<std::vector<Vec>> eigenlines(const Field& F, const Mat& d);

/// The standard complements to the group generated by s1_gens that are
/// normalized by d1, built from the eigenlines of d1 other than the fixed
/// line of S1. Each is returned as a block embedding.
std::vector<BlockEmbedding> standard_complements_normalized(const Field& F, const Mat& d1,
                                                            const std::vector<Mat>& s1_gens);

/// Split tori of the image of s2 (conjugates of its diagonal torus) that are
/// normalized by every d1 generator. Each torus is returned as its element set.
std::vector<MatSet> tori_normalized_by(const Field& F, const std::vector<Mat>& d1_gens,
                                       const BlockEmbedding& s2);

/// Elements of the set that commute with every generator.
MatSet centralizer(const Field& F, const MatSet& group, const std::vector<Mat>& gens);

/// diag(ac, bc, bd).
Mat extend_diagonal(const Field& F, Elem a, Elem b, Elem c, Elem d);

}  // namespace ctam

#pragma once

#include <optional>
#include <vector>

#include "ctam/field.hpp"
#include "ctam/matrix.hpp"

namespace ctam {

/// Identity plus lam at (i, j); indices are 0-based. Throws DomainError if i == j.
Mat root_elem(const Field& F, int n, int i, int j, Elem lam);

/// Transpose-inverse.
Mat omega(const Field& F, const Mat& m);

/// [[0,-1],[1,0]]; conjugation by it is omega on SL_2.
Mat curly_e(const Field& F);

/// Semilinear automorphism M -> g * omega^eps(sigma^r(M)) * g^-1 of SL_n.
struct SLAut {
  int eps = 0;
  int r = 0;
  std::optional<Mat> g;
};

Mat apply_slaut(const Field& F, const SLAut& a, const Mat& m);

/// The automorphism apply(a1, apply(a2, .)).
SLAut compose(const Field& F, const SLAut& a1, const SLAut& a2);

/// X+(b) for b in the additive GF(p)-basis of the field, then X-(1).
/// Together they generate SL_2(q).
std::vector<Mat> sl2_generators(const Field& F);

/// Upper and lower root subgroups of SL_2, each as its GF(p)-basis generators.
std::vector<Mat> sl2_upper_root_gens(const Field& F);
std::vector<Mat> sl2_lower_root_gens(const Field& F);

/// X_{i,i+1}(b) and X_{i+1,i}(b) for b in the GF(p)-basis; generates SL_3(q).
std::vector<Mat> sl3_generators(const Field& F);

/// Every element of SL_2(q), in lexicographic order of entries.
std::vector<Mat> sl2_elements(const Field& F);

}  // namespace ctam

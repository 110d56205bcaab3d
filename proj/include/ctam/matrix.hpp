#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctam/field.hpp"

namespace ctam {

using Vec = std::vector<Elem>;

/// Dense square matrix over a finite field, row-major. Dimension is at most 8
/// in practice; nothing enforces that.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  Mat(int n, std::vector<Elem> entries);

  static Mat identity(const Field& F, int n);
  static Mat diag(std::span<const Elem> d);

  int dim() const { return n_; }
  Elem operator()(int i, int j) const { return a_[i * n_ + j]; }
  Elem& operator()(int i, int j) { return a_[i * n_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  int n_ = 0;
  std::vector<Elem> a_;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept;
};

Mat mul(const Field& F, const Mat& a, const Mat& b);
Mat add(const Field& F, const Mat& a, const Mat& b);
Mat sub(const Field& F, const Mat& a, const Mat& b);
Mat scale(const Field& F, Elem c, const Mat& a);
Mat transpose(const Mat& a);
Elem det(const Field& F, const Mat& a);
std::optional<Mat> try_inverse(const Field& F, const Mat& a);
/// Throws DomainError if singular.
Mat inverse(const Field& F, const Mat& a);
/// g a g^-1
Mat conjugate(const Field& F, const Mat& g, const Mat& a);
bool commute(const Field& F, const Mat& a, const Mat& b);
/// Entrywise a -> a^(p^r).
Mat frobenius(const Field& F, FieldAut r, const Mat& a);
bool is_identity(const Field& F, const Mat& a);
bool is_diagonal(const Field& F, const Mat& a);
/// (a - I)^n == 0.
bool is_unipotent(const Field& F, const Mat& a);

Vec apply(const Field& F, const Mat& a, const Vec& v);
/// Coefficients of det(xI - a), constant term first.
std::vector<Elem> charpoly(const Field& F, const Mat& a);

// Subspaces of k^n are handled as lists of spanning vectors; the helpers
// below always return a reduced basis.
std::vector<Vec> row_reduce(const Field& F, std::vector<Vec> rows);
int rank(const Field& F, const std::vector<Vec>& vecs);
std::vector<Vec> kernel(const Field& F, const Mat& a);
std::vector<Vec> image(const Field& F, const Mat& a);
std::vector<Vec> intersect(const Field& F, const std::vector<Vec>& u, const std::vector<Vec>& w);
bool contains(const Field& F, const std::vector<Vec>& space, const Vec& v);
bool subspace_le(const Field& F, const std::vector<Vec>& u, const std::vector<Vec>& w);
/// Matrix whose columns are the given vectors.
Mat from_columns(const std::vector<Vec>& cols);

/// "[e00,e01,...]" with elements serialized as in Field::format.
std::string format(const Field& F, const Mat& a);
Mat parse_mat(const Field& F, std::string_view text);

}  // namespace ctam

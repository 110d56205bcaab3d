#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctam/field.hpp"
#include "ctam/matrix.hpp"

namespace ctam {

/// Element of GF(q)[t, t^-1]: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Elem c) { return monomial(c, 0); }
  static LaurentPoly monomial(Elem c, int k);

  bool is_zero() const { return c_.empty(); }
  /// Units of the Laurent ring are exactly the nonzero monomials.
  bool is_unit() const { return c_.size() == 1; }
  Elem coeff(int k) const;
  const std::map<int, Elem>& terms() const { return c_; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly add(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly mul(const Field& F, const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::map<int, Elem> c_;
};

LaurentPoly add(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const Field& F, const LaurentPoly& a);
LaurentPoly sub(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const Field& F, const LaurentPoly& a, const LaurentPoly& b);
/// Substitute t = c (c nonzero).
Elem evaluate(const Field& F, const LaurentPoly& a, Elem c);
/// "{k:[c..],...}" in increasing exponent order; "{}" for zero.
std::string format(const Field& F, const LaurentPoly& a);

class LMat {
 public:
  LMat() = default;
  explicit LMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static LMat identity(const Field& F, int n);
  static LMat from_field(const Mat& m);

  int dim() const { return n_; }
  const LaurentPoly& operator()(int i, int j) const { return a_[i * n_ + j]; }
  LaurentPoly& operator()(int i, int j) { return a_[i * n_ + j]; }

  friend bool operator==(const LMat&, const LMat&) = default;

 private:
  int n_ = 0;
  std::vector<LaurentPoly> a_;
};

LMat mul(const Field& F, const LMat& a, const LMat& b);
/// Laplace expansion along the first row.
LaurentPoly det(const Field& F, const LMat& a);
Mat evaluate(const Field& F, const LMat& a, Elem c);
std::string format(const Field& F, const LMat& a);

}  // namespace ctam

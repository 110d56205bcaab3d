#include "ctam/laurent.hpp"

#include "ctam/error.hpp"

namespace ctam {

LaurentPoly LaurentPoly::monomial(Elem c, int k) {
  LaurentPoly p;
  if (c != Elem{0}) p.c_[k] = c;
  return p;
}

Elem LaurentPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Elem{0} : it->second;
}

LaurentPoly add(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.c_) {
    const Elem s = F.add(r.coeff(k), c);
    if (s == F.zero())
      r.c_.erase(k);
    else
      r.c_[k] = s;
  }
  return r;
}

LaurentPoly neg(const Field& F, const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [k, c] : a.terms()) r = add(F, r, LaurentPoly::monomial(F.neg(c), k));
  return r;
}

LaurentPoly sub(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  return add(F, a, neg(F, b));
}

LaurentPoly mul(const Field& F, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) {
      const int k = ka + kb;
      const Elem s = F.add(r.coeff(k), F.mul(ca, cb));
      if (s == F.zero())
        r.c_.erase(k);
      else
        r.c_[k] = s;
    }
  return r;
}

Elem evaluate(const Field& F, const LaurentPoly& a, Elem c) {
  if (c == F.zero()) throw DomainError("cannot evaluate a Laurent polynomial at t = 0");
  Elem s = F.zero();
  for (const auto& [k, coef] : a.terms()) s = F.add(s, F.mul(coef, F.pow(c, k)));
  return s;
}

std::string format(const Field& F, const LaurentPoly& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(k) + ':' + F.format(c);
  }
  return s + "}";
}

LMat LMat::identity(const Field& F, int n) {
  LMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(F.one());
  return m;
}

LMat LMat::from_field(const Mat& m) {
  LMat r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = LaurentPoly::constant(m(i, j));
  return r;
}

LMat mul(const Field& F, const LMat& a, const LMat& b) {
  const int n = a.dim();
  LMat c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) = add(F, c(i, j), mul(F, a(i, k), b(k, j)));
      }
    }
  return c;
}

namespace {

LaurentPoly det_minor(const Field& F, const LMat& a, std::vector<int>& rows_left, int col) {
  const int n = a.dim();
  if (col == n) return LaurentPoly::constant(F.one());
  LaurentPoly total;
  int sign_index = 0;
  for (std::size_t idx = 0; idx < rows_left.size(); ++idx) {
    const int r = rows_left[idx];
    if (r < 0) continue;
    const int parity = sign_index++;
    if (a(r, col).is_zero()) continue;
    rows_left[idx] = -1;
    LaurentPoly term = mul(F, a(r, col), det_minor(F, a, rows_left, col + 1));
    rows_left[idx] = r;
    total = (parity % 2 == 0) ? add(F, total, term) : sub(F, total, term);
  }
  return total;
}

}  // namespace

LaurentPoly det(const Field& F, const LMat& a) {
  std::vector<int> rows(a.dim());
  for (int i = 0; i < a.dim(); ++i) rows[i] = i;
  return det_minor(F, a, rows, 0);
}

Mat evaluate(const Field& F, const LMat& a, Elem c) {
  Mat m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m(i, j) = evaluate(F, a(i, j), c);
  return m;
}

std::string format(const Field& F, const LMat& a) {
  std::string s = "[";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (i || j) s += ',';
      s += format(F, a(i, j));
    }
  return s + "]";
}

}  // namespace ctam

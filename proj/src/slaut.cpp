#include "ctam/slaut.hpp"

#include "ctam/error.hpp"

namespace ctam {

Mat root_elem(const Field& F, int n, int i, int j, Elem lam) {
  if (i == j) throw DomainError("root element needs i != j");
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("root element index out of range");
  Mat m = Mat::identity(F, n);
  m(i, j) = lam;
  return m;
}

Mat omega(const Field& F, const Mat& m) { return transpose(inverse(F, m)); }

Mat curly_e(const Field& F) {
  Mat e(2);
  e(0, 1) = F.neg(F.one());
  e(1, 0) = F.one();
  return e;
}

Mat apply_slaut(const Field& F, const SLAut& a, const Mat& m) {
  if (a.g && a.g->dim() != m.dim()) throw DomainError("automorphism and matrix dimensions differ");
  Mat out = frobenius(F, FieldAut{a.r}, m);
  if (a.eps % 2) out = omega(F, out);
  if (a.g) out = conjugate(F, *a.g, out);
  return out;
}

SLAut compose(const Field& F, const SLAut& a1, const SLAut& a2) {
  SLAut c;
  c.eps = (a1.eps + a2.eps) % 2;
  c.r = F.reduce_aut(a1.r + a2.r);
  // g1 * omega^e1(sigma^r1(g2)); on the conjugating part omega acts as on
  // any invertible matrix.
  if (a1.g || a2.g) {
    const int n = a1.g ? a1.g->dim() : a2.g->dim();
    Mat g2 = a2.g ? *a2.g : Mat::identity(F, n);
    g2 = frobenius(F, FieldAut{a1.r}, g2);
    if (a1.eps % 2) g2 = omega(F, g2);
    c.g = a1.g ? mul(F, *a1.g, g2) : g2;
  }
  return c;
}

std::vector<Mat> sl2_upper_root_gens(const Field& F) {
  std::vector<Mat> gens;
  for (Elem b : F.prime_basis()) gens.push_back(root_elem(F, 2, 0, 1, b));
  return gens;
}

std::vector<Mat> sl2_lower_root_gens(const Field& F) {
  std::vector<Mat> gens;
  for (Elem b : F.prime_basis()) gens.push_back(root_elem(F, 2, 1, 0, b));
  return gens;
}

std::vector<Mat> sl2_generators(const Field& F) {
  auto gens = sl2_upper_root_gens(F);
  gens.push_back(root_elem(F, 2, 1, 0, F.one()));
  return gens;
}

std::vector<Mat> sl3_generators(const Field& F) {
  std::vector<Mat> gens;
  for (int i = 0; i < 2; ++i)
    for (Elem b : F.prime_basis()) {
      gens.push_back(root_elem(F, 3, i, i + 1, b));
      gens.push_back(root_elem(F, 3, i + 1, i, b));
    }
  return gens;
}

std::vector<Mat> sl2_elements(const Field& F) {
  std::vector<Mat> out;
  const auto els = F.elements();
  for (Elem a : els)
    for (Elem b : els)
      for (Elem c : els)
        for (Elem d : els)
          if (F.sub(F.mul(a, d), F.mul(b, c)) == F.one()) out.push_back(Mat(2, {a, b, c, d}));
  return out;
}

}  // namespace ctam

#include "ctam/matrix.hpp"

#include <cmath>

#include "ctam/error.hpp"

namespace ctam {

Mat::Mat(int n, std::vector<Elem> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw DomainError("matrix needs " + std::to_string(n * n) + " entries");
}

Mat Mat::identity(const Field& F, int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Mat Mat::diag(std::span<const Elem> d) {
  Mat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
  return m;
}

std::size_t MatHash::operator()(const Mat& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elem e : m.entries()) {
    h ^= e.v;
    h *= 1099511628211ull;
  }
  return h;
}

Mat mul(const Field& F, const Mat& a, const Mat& b) {
  const int n = a.dim();
  Mat c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem aik = a(i, k);
      if (aik == F.zero()) continue;
      for (int j = 0; j < n; ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  return c;
}

Mat add(const Field& F, const Mat& a, const Mat& b) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Mat sub(const Field& F, const Mat& a, const Mat& b) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

Mat scale(const Field& F, Elem s, const Mat& a) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  return t;
}

Elem det(const Field& F, const Mat& a) {
  Mat m = a;
  const int n = m.dim();
  Elem d = F.one();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m(piv, col) == F.zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(col, col));
    const Elem inv = F.inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      const Elem f = F.mul(m(i, col), inv);
      if (f == F.zero()) continue;
      for (int j = col; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(col, j)));
    }
  }
  return d;
}

std::optional<Mat> try_inverse(const Field& F, const Mat& a) {
  const int n = a.dim();
  Mat m = a;
  Mat r = Mat::identity(F, n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m(piv, col) == F.zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(r(piv, j), r(col, j));
      }
    const Elem inv = F.inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) = F.mul(m(col, j), inv);
      r(col, j) = F.mul(r(col, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Elem f = m(i, col);
      if (f == F.zero()) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) = F.sub(m(i, j), F.mul(f, m(col, j)));
        r(i, j) = F.sub(r(i, j), F.mul(f, r(col, j)));
      }
    }
  }
  return r;
}

Mat inverse(const Field& F, const Mat& a) {
  auto r = try_inverse(F, a);
  if (!r) throw DomainError("singular matrix");
  return *r;
}

Mat conjugate(const Field& F, const Mat& g, const Mat& a) {
  return mul(F, mul(F, g, a), inverse(F, g));
}

bool commute(const Field& F, const Mat& a, const Mat& b) { return mul(F, a, b) == mul(F, b, a); }

Mat frobenius(const Field& F, FieldAut r, const Mat& a) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = F.frobenius(r, a(i, j));
  return c;
}

bool is_identity(const Field& F, const Mat& a) { return a == Mat::identity(F, a.dim()); }

bool is_diagonal(const Field& F, const Mat& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j && a(i, j) != F.zero()) return false;
  return true;
}

bool is_unipotent(const Field& F, const Mat& a) {
  const Mat n = sub(F, a, Mat::identity(F, a.dim()));
  Mat p = n;
  for (int k = 1; k < a.dim(); ++k) p = mul(F, p, n);
  return p == Mat(a.dim());
}

Vec apply(const Field& F, const Mat& a, const Vec& v) {
  Vec out(a.dim(), F.zero());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out[i] = F.add(out[i], F.mul(a(i, j), v[j]));
  return out;
}

std::vector<Elem> charpoly(const Field& F, const Mat& a) {
  // Coefficient of x^(n-k) is (-1)^k times the sum of the k x k principal minors.
  const int n = a.dim();
  std::vector<Elem> coeffs(n + 1, F.zero());
  coeffs[n] = F.one();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Mat minor(k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) minor(r, c) = a(idx[r], idx[c]);
    Elem d = det(F, minor);
    if (k % 2 == 1) d = F.neg(d);
    coeffs[n - k] = F.add(coeffs[n - k], d);
  }
  return coeffs;
}

std::vector<Vec> row_reduce(const Field& F, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const int cols = static_cast<int>(rows.front().size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = r;
    while (piv < static_cast<int>(rows.size()) && rows[piv][c] == F.zero()) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == F.zero()) continue;
      const Elem f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank(const Field& F, const std::vector<Vec>& vecs) {
  return static_cast<int>(row_reduce(F, vecs).size());
}

std::vector<Vec> kernel(const Field& F, const Mat& a) {
  const int n = a.dim();
  std::vector<Vec> rows(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a(i, j);
  rows = row_reduce(F, rows);
  std::vector<int> pivot_col;
  for (const auto& row : rows) {
    int c = 0;
    while (row[c] == F.zero()) ++c;
    pivot_col.push_back(c);
  }
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    bool is_pivot = false;
    for (int c : pivot_col) is_pivot |= (c == free);
    if (is_pivot) continue;
    Vec v(n, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivot_col[r]] = F.neg(rows[r][free]);
    basis.push_back(v);
  }
  return basis;
}

std::vector<Vec> image(const Field& F, const Mat& a) {
  std::vector<Vec> cols(a.dim(), Vec(a.dim()));
  for (int j = 0; j < a.dim(); ++j)
    for (int i = 0; i < a.dim(); ++i) cols[j][i] = a(i, j);
  return row_reduce(F, cols);
}

bool contains(const Field& F, const std::vector<Vec>& space, const Vec& v) {
  auto ext = space;
  ext.push_back(v);
  return rank(F, ext) == rank(F, space);
}

bool subspace_le(const Field& F, const std::vector<Vec>& u, const std::vector<Vec>& w) {
  for (const auto& v : u)
    if (!contains(F, w, v)) return false;
  return true;
}

std::vector<Vec> intersect(const Field& F, const std::vector<Vec>& u, const std::vector<Vec>& w) {
  // Zassenhaus: reduce [u u; w 0], keep rows whose left half vanishes.
  if (u.empty() || w.empty()) return {};
  const int n = static_cast<int>(u.front().size());
  std::vector<Vec> rows;
  for (const auto& x : u) {
    Vec r(2 * n);
    for (int i = 0; i < n; ++i) r[i] = r[n + i] = x[i];
    rows.push_back(r);
  }
  for (const auto& x : w) {
    Vec r(2 * n, F.zero());
    for (int i = 0; i < n; ++i) r[i] = x[i];
    rows.push_back(r);
  }
  rows = row_reduce(F, rows);
  std::vector<Vec> out;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (int i = 0; i < n; ++i) left_zero &= (r[i] == F.zero());
    if (left_zero) out.emplace_back(r.begin() + n, r.end());
  }
  return row_reduce(F, out);
}

Mat from_columns(const std::vector<Vec>& cols) {
  const int n = static_cast<int>(cols.size());
  Mat m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

std::string format(const Field& F, const Mat& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (k) s += ',';
    s += F.format(a.entries()[k]);
  }
  return s + "]";
}

Mat parse_mat(const Field& F, std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InputError("malformed matrix '" + std::string(text) + "'");
  std::vector<Elem> entries;
  std::size_t pos = 1;
  while (pos < text.size() - 1) {
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    const auto close = text.find(']', pos);
    if (text[pos] != '[' || close == std::string_view::npos)
      throw InputError("malformed matrix '" + std::string(text) + "'");
    entries.push_back(F.parse_elem(text.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
  if (n * n != static_cast<int>(entries.size()) || n == 0)
    throw InputError("matrix entry count is not a square");
  return Mat(n, std::move(entries));
}

}  // namespace ctam

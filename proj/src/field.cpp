#include "ctam/field.hpp"

#include <charconv>
#include <map>
#include <utility>

#include "ctam/error.hpp"

namespace ctam {

namespace {

// One monic irreducible modulus per supported (p, m), low degree first.
// Non-prime fields use Conway polynomials, so x is primitive.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {0, 1}},       {{2, 2}, {1, 1, 1}}, {{2, 3}, {1, 1, 0, 1}},
      {{3, 1}, {0, 1}},       {{3, 2}, {2, 2, 1}}, {{5, 1}, {0, 1}},
      {{7, 1}, {0, 1}},
  };
  return table;
}

std::vector<int> decode(int v, int p, int m) {
  std::vector<int> c(m);
  for (int k = 0; k < m; ++k) {
    c[k] = v % p;
    v /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residues as polynomials, reduced by the monic modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int k = 0; k <= m; ++k)
      prod[d - m + k] = ((prod[d - m + k] - c * mod[k]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(int p, int m) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InputError("field degree must be at least 1");
  auto it = modulus_table().find({p, m});
  if (it == modulus_table().end())
    throw InputError("unsupported field " + std::to_string(p) + "^" + std::to_string(m));
  return Field(p, m, it->second);
}

Field Field::parse(std::string_view spec) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InputError("malformed field string '" + std::string(spec) + "'");
    return v;
  };
  const auto caret = spec.find('^');
  if (caret == std::string_view::npos) return make(parse_int(spec), 1);
  return make(parse_int(spec.substr(0, caret)), parse_int(spec.substr(caret + 1)));
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (int k = 0; k < m; ++k) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const auto ca = decode(a, p, m);
    std::vector<int> cn(m);
    for (int k = 0; k < m; ++k) cn[k] = (p - ca[k]) % p;
    neg_[a] = static_cast<std::uint16_t>(encode(cn, p));
    for (int b = 0; b < q_; ++b) {
      const auto cb = decode(b, p, m);
      std::vector<int> cs(m);
      for (int k = 0; k < m; ++k) cs[k] = (ca[k] + cb[k]) % p;
      add_[a * q_ + b] = static_cast<std::uint16_t>(encode(cs, p));
      mul_[a * q_ + b] = static_cast<std::uint16_t>(encode(poly_mulmod(ca, cb, modulus_, p), p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);

  frob_.resize(m * q_);
  for (int a = 0; a < q_; ++a) {
    Elem x{static_cast<std::uint16_t>(a)};
    for (int r = 0; r < m; ++r) {
      frob_[r * q_ + a] = x.v;
      x = pow(x, p);
    }
  }

  primitive_ = one();
  for (int a = 2; a < q_; ++a) {
    Elem g{static_cast<std::uint16_t>(a)};
    int ord = 1;
    for (Elem y = g; y != one(); y = mul(y, g)) ++ord;
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::string Field::name() const { return std::to_string(p_) + "^" + std::to_string(m_); }

Elem Field::from_int(long n) const {
  const long r = ((n % p_) + p_) % p_;
  return Elem{static_cast<std::uint16_t>(r)};
}

Elem Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != m_)
    throw InputError("element needs " + std::to_string(m_) + " coefficients");
  std::vector<int> c(coeffs.begin(), coeffs.end());
  for (int& ck : c) ck = ((ck % p_) + p_) % p_;
  return Elem{static_cast<std::uint16_t>(encode(c, p_))};
}

std::vector<int> Field::coeffs(Elem a) const { return decode(a.v, p_, m_); }

Elem Field::inv(Elem a) const {
  if (a == zero()) throw DomainError("inversion of zero in GF(" + name() + ")");
  return Elem{inv_[a.v]};
}

Elem Field::pow(Elem a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(FieldAut r, Elem a) const {
  return Elem{frob_[reduce_aut(r.r) * q_ + a.v]};
}

Elem Field::x() const {
  if (m_ == 1) return zero();
  return Elem{static_cast<std::uint16_t>(p_)};
}

std::vector<Elem> Field::prime_basis() const {
  std::vector<Elem> basis;
  int v = 1;
  for (int k = 0; k < m_; ++k, v *= p_) basis.push_back(Elem{static_cast<std::uint16_t>(v)});
  return basis;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (int a = 0; a < q_; ++a) out.push_back(Elem{static_cast<std::uint16_t>(a)});
  return out;
}

std::string Field::format(Elem a) const {
  std::string s = "[";
  const auto c = coeffs(a);
  for (int k = 0; k < m_; ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s + "]";
}

Elem Field::parse_elem(std::string_view text) const {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InputError("malformed field element '" + std::string(text) + "'");
  std::vector<int> c;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto tok = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || v < 0 || v >= p_)
      throw InputError("malformed field element '" + std::string(text) + "'");
    c.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return from_coeffs(c);
}

}  // namespace ctam

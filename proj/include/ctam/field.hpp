#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctam {

/// Element of GF(p^m), stored as the integer sum c_k p^k of its coefficient
/// vector in the polynomial basis. The encoding is canonical, so equality and
/// ordering are structural.
struct Elem {
  std::uint16_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// A power of the Frobenius automorphism x -> x^p, taken mod the degree m.
struct FieldAut {
  int r = 0;
};

/// Exact arithmetic in GF(p^m) for the small (p, m) pairs in the built-in
/// modulus table. Immutable once constructed; all operations are table
/// lookups.
class Field {
 public:
  /// Throws InputError for a non-prime p or an unsupported (p, m).
  static Field make(int p, int m);

  /// Parses "p^m" (e.g. "2^2") or a bare prime "5".
  static Field parse(std::string_view spec);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  int order() const { return q_; }
  std::string name() const;

  /// Coefficients c_0..c_m of the monic modulus (c_m = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer under Z -> GF(p).
  Elem from_int(long n) const;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.v * q_ + b.v]}; }
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long e) const;

  /// a^(p^r), with r taken mod m.
  Elem frobenius(FieldAut r, Elem a) const;
  int reduce_aut(int r) const { return ((r % m_) + m_) % m_; }

  /// A generator of the multiplicative group (smallest encoding).
  Elem primitive() const { return primitive_; }
  /// The class of x, i.e. the element with coefficient vector (0,1,0,...).
  /// Equal to from_int(0) for prime fields.
  Elem x() const;
  /// 1, x, ..., x^{m-1}: an additive basis over GF(p).
  std::vector<Elem> prime_basis() const;
  std::vector<Elem> elements() const;

  /// Serialized form "[c0,c1,...]".
  std::string format(Elem a) const;
  Elem parse_elem(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(int p, int m, std::vector<int> modulus);

  int p_;
  int m_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> frob_;  // frob_[r * q + a] = a^(p^r)
  Elem primitive_;
};

bool is_prime(int n);

}  // namespace ctam

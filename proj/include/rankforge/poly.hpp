#pragma once

// Dense univariate polynomials over exact coefficient domains, constant term
// first. The zero polynomial has no coefficients, so domain-dependent zeros
// and ones are derived from an existing coefficient ("prototype").

#include "rankforge/error.hpp"
#include "rankforge/finite_field.hpp"
#include "rankforge/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rankforge {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational inverse(const Rational& c) {
    if (is_zero(c)) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational");
    return Rational(1) / c;
  }
  static Rational mul_int(const Rational& c, std::int64_t k) { return c * Rational(static_cast<long>(k)); }
  static bool same_domain(const Rational&, const Rational&) { return true; }
};

template <>
struct CoeffTraits<Integer> {
  static constexpr bool is_field = false;
  static bool is_zero(const Integer& c) { return sgn(c) == 0; }
  static Integer zero_like(const Integer&) { return Integer(0); }
  static Integer one_like(const Integer&) { return Integer(1); }
  static Integer mul_int(const Integer& c, std::int64_t k) { return c * Integer(static_cast<long>(k)); }
  static bool same_domain(const Integer&, const Integer&) { return true; }
};

template <>
struct CoeffTraits<FqElem> {
  static constexpr bool is_field = true;
  static bool is_zero(const FqElem& c) { return c.is_zero(); }
  static FqElem zero_like(const FqElem& c) { return c - c; }
  static FqElem one_like(const FqElem& c) { return c.pow(std::uint64_t{0}); }
  static FqElem inverse(const FqElem& c) { return c.inverse(); }
  static FqElem mul_int(const FqElem& c, std::int64_t k) { return c.scaled(k); }
  static bool same_domain(const FqElem& a, const FqElem& b) {
    const auto* fa = a.field_data();
    const auto* fb = b.field_data();
    return fa == fb || (fa && fb && fa->p == fb->p && fa->modulus == fb->modulus);
  }
};

template <class C>
class Poly {
 public:
  using Traits = CoeffTraits<C>;

  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const C& value) { return Poly(std::vector<C>{value}); }
  static Poly monomial(const C& coeff, std::size_t k) {
    std::vector<C> c(k + 1, Traits::zero_like(coeff));
    c[k] = coeff;
    return Poly(std::move(c));
  }
  /// x - root
  static Poly linear_root(const C& root) {
    C neg = -root;
    return Poly(std::vector<C>{neg, Traits::one_like(root)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  const C& leading() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  /// Coefficient of x^i, zero beyond the degree.
  C coeff_or_zero(std::size_t i, const C& proto) const {
    return i < c_.size() ? c_[i] : Traits::zero_like(proto);
  }
  bool is_monic() const {
    return !c_.empty() && Traits::is_zero(C(c_.back() - Traits::one_like(c_.back())));
  }

  C eval(const C& x) const {
    C acc = Traits::zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + *it;
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<C> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Traits::mul_int(c_[i], static_cast<std::int64_t>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const
    requires CoeffTraits<C>::is_field
  {
    if (c_.empty()) return *this;
    C inv = Traits::inverse(c_.back());
    return scaled(inv);
  }

  Poly scaled(const C& k) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(C(c * k));
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(C(-c));
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    check_domain(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_domain(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    a.check_domain(b);
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, Traits::zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + C(a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  void check_domain(const Poly& o) const {
    if (!c_.empty() && !o.c_.empty() && !Traits::same_domain(c_[0], o.c_[0]))
      throw Error(ErrorCode::DomainMismatch, "polynomials over different coefficient domains");
  }

  std::vector<C> c_;
};

/// Quotient and remainder. Over non-field domains the divisor must be monic.
template <class C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& f, const Poly<C>& g) {
  using T = CoeffTraits<C>;
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!f.is_zero() && !T::same_domain(f[0], g[0]))
    throw Error(ErrorCode::DomainMismatch, "polynomials over different coefficient domains");
  const C& lead = g.leading();
  C inv_lead = T::one_like(lead);
  if constexpr (T::is_field) {
    inv_lead = T::inverse(lead);
  } else {
    if (!g.is_monic()) throw Error(ErrorCode::NonMonicDivisor, "divisor must be monic over a non-field domain");
  }
  if (f.degree() < g.degree()) return {Poly<C>(), f};
  std::vector<C> rem = f.coeffs();
  const int dg = g.degree();
  std::vector<C> quot(static_cast<std::size_t>(f.degree() - dg + 1), T::zero_like(lead));
  for (int k = f.degree(); k >= dg; --k) {
    C t = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dg)] = t;
    if (T::is_zero(t)) continue;
    for (int j = 0; j <= dg; ++j) {
      auto idx = static_cast<std::size_t>(k - dg + j);
      rem[idx] = rem[idx] - C(t * g[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Poly<C>(std::move(quot)), Poly<C>(std::move(rem))};
}

template <class C>
Poly<C> operator%(const Poly<C>& f, const Poly<C>& g) {
  return divmod(f, g).second;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class C>
  requires CoeffTraits<C>::is_field
Poly<C> gcd(Poly<C> a, Poly<C> b) {
  while (!b.is_zero()) {
    Poly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^exponent mod modulus by square-and-multiply.
template <class C>
Poly<C> powmod(const Poly<C>& base, const Integer& exponent, const Poly<C>& modulus) {
  using T = CoeffTraits<C>;
  Poly<C> result = Poly<C>::constant(T::one_like(modulus.leading())) % modulus;
  Poly<C> b = base % modulus;
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (sgn(exponent) == 0) return result;
  for (auto i = static_cast<long>(bits) - 1; i >= 0; --i) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = (result * b) % modulus;
  }
  return result;
}

/// leading * prod (x - r_i).
template <class C>
Poly<C> expand_from_roots(std::span<const C> roots, const C& leading) {
  if (CoeffTraits<C>::is_zero(leading))
    throw Error(ErrorCode::ZeroLeadingCoefficient, "expand_from_roots: leading coefficient is zero");
  Poly<C> out = Poly<C>::constant(leading);
  for (const auto& r : roots) out *= Poly<C>::linear_root(r);
  return out;
}

template <class C>
std::string format_poly(const Poly<C>& f, const std::function<std::string(const C&)>& fmt) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += fmt(f.coeffs()[i]);
  }
  return out.empty() ? "0" : out;
}

using RationalPoly = Poly<Rational>;
using IntegerPoly = Poly<Integer>;
using FqPoly = Poly<FqElem>;

/// Parses "c0,c1,...,cn" (constant first).
RationalPoly parse_rational_poly(std::string_view text);
IntegerPoly parse_integer_poly(std::string_view text);
std::string format_rational_poly(const RationalPoly& f);
std::string format_integer_poly(const IntegerPoly& f);
/// Coefficients of an F_q polynomial whose entries live in a prime field.
std::string format_prime_poly(const FqPoly& f);

}  // namespace rankforge

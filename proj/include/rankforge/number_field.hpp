#pragma once

// Number fields K = Q(theta) given by a monic irreducible integer polynomial,
// prime ideals of the order Z[theta] via Dedekind factorization, reduction
// into residue fields, and the prime-ideal log sum.

#include "rankforge/factor.hpp"
#include "rankforge/finite_field.hpp"
#include "rankforge/poly.hpp"
#include "rankforge/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rankforge {

class KElem;

namespace detail {
struct NumberFieldData {
  IntegerPoly min_poly;
  RationalPoly min_poly_q;
  int degree = 0;
  Integer discriminant;
  Integer twice_disc_abs;
  std::optional<std::vector<std::uint64_t>> explicit_excluded;  // sorted, always holds 2
  bool asserted_irreducible = false;
};
}  // namespace detail

class NumberField {
 public:
  NumberField() = default;

  /// Checks monic, nonzero discriminant and irreducibility (a mod-p degree
  /// certificate, exact root tests up to degree 3). Degree >= 4 polynomials
  /// without a certificate need `assert_irreducible`.
  static NumberField make(IntegerPoly min_poly, std::optional<std::vector<std::uint64_t>> excluded_primes = {},
                          bool assert_irreducible = false);
  static NumberField rationals();

  int degree() const { return data_->degree; }
  const IntegerPoly& min_poly() const { return data_->min_poly; }
  const RationalPoly& min_poly_rational() const { return data_->min_poly_q; }
  const Integer& discriminant() const { return data_->discriminant; }
  bool asserted_irreducible() const { return data_->asserted_irreducible; }
  const std::optional<std::vector<std::uint64_t>>& explicit_excluded() const { return data_->explicit_excluded; }

  /// p = 2 always; otherwise p | 2 disc(m), or membership in the explicit list.
  bool is_excluded(std::uint64_t p) const;

  KElem zero() const;
  KElem one() const;
  KElem theta() const;
  KElem from_rational(const Rational& value) const;
  /// Power-basis coefficients; at most degree() entries, missing ones are 0.
  KElem element(std::vector<Rational> coeffs) const;
  /// "q0,q1,...,q_{n-1}" with rationals as "num/den".
  KElem parse_element(std::string_view text) const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  explicit NumberField(std::shared_ptr<const detail::NumberFieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::NumberFieldData> data_;
  friend class KElem;
};

class KElem {
 public:
  KElem() = default;

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  KElem& operator+=(const KElem& o);
  KElem& operator-=(const KElem& o);
  KElem& operator*=(const KElem& o);
  KElem& operator/=(const KElem& o);
  friend KElem operator+(KElem a, const KElem& b) { return a += b; }
  friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
  friend KElem operator*(KElem a, const KElem& b) { return a *= b; }
  friend KElem operator/(KElem a, const KElem& b) { return a /= b; }
  KElem operator-() const;
  friend bool operator==(const KElem& a, const KElem& b);

  KElem inverse() const;
  /// Field norm N_{K/Q}, the determinant of multiplication by this element.
  Rational norm() const;
  /// Least common multiple of the coefficient denominators.
  Integer denominator() const;

  std::string to_string() const;

 private:
  friend class NumberField;
  KElem(NumberField f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same_field(const KElem& o) const;

  NumberField field_;
  std::vector<Rational> c_;
};

template <>
struct CoeffTraits<KElem> {
  static constexpr bool is_field = true;
  static bool is_zero(const KElem& c) { return c.is_zero(); }
  static KElem zero_like(const KElem& c) { return c.field().zero(); }
  static KElem one_like(const KElem& c) { return c.field().one(); }
  static KElem inverse(const KElem& c) { return c.inverse(); }
  static KElem mul_int(const KElem& c, std::int64_t k) {
    return c * c.field().from_rational(Rational(static_cast<long>(k)));
  }
  static bool same_domain(const KElem& a, const KElem& b) { return a.field() == b.field(); }
};

using KPoly = Poly<KElem>;

/// A prime of Z[theta] above an unexcluded rational prime p, from one
/// irreducible factor pi of m mod p. Owns its residue field F_p[x]/(pi).
struct PrimeIdeal {
  std::uint64_t p = 0;
  FqField prime_field;  // coefficients of `factor` live here
  FqPoly factor;
  int f = 0;  // residue degree
  int e = 0;  // multiplicity of the factor
  std::uint64_t norm = 0;
  FqField residue_field;
  FqElem theta_image;  // class of x in the residue field

  std::string factor_text() const { return format_prime_poly(factor); }
};

struct IdealEnumeration {
  std::vector<PrimeIdeal> ideals;  // sorted by (norm, p, factor order)
  std::size_t excluded_primes = 0;  // rational primes <= X skipped by policy
};

/// All prime ideals of norm <= max_norm. Work is split across `threads`.
IdealEnumeration enumerate_prime_ideals(const NumberField& field, std::uint64_t max_norm, int threads = 1);

/// The primes above one rational prime p (empty if p is excluded).
std::vector<PrimeIdeal> primes_above(const NumberField& field, std::uint64_t p);

/// Ring homomorphism Q(theta) -> F_p[x]/(pi); throws DenominatorNotInvertible.
FqElem reduce(const KElem& x, const PrimeIdeal& prime);

struct LandauResult {
  double sum = 0.0;
  double ratio = 0.0;
  std::size_t count = 0;
  std::size_t excluded_primes = 0;
};

/// Sum of log N(P) over prime ideals of norm <= max_norm, compensated
/// summation in double precision.
LandauResult landau_sum(const NumberField& field, std::uint64_t max_norm, int threads = 1);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace rankforge

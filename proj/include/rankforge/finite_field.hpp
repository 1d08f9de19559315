#pragma once

// Arithmetic in F_q, q = p^r, p an odd prime, elements in a polynomial basis
// over F_p with an explicitly supplied monic irreducible modulus.

#include "rankforge/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rankforge {

inline constexpr int kMaxExtensionDegree = 16;

class FqElem;

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  int r = 0;
  std::vector<std::uint64_t> modulus;  // constant first, monic, size r + 1
  Integer q;
  Integer half_order;  // (q - 1) / 2
  Integer q_minus_2;
  std::uint64_t q_small = 0;           // q when it fits in 63 bits, else 0
  std::uint64_t half_order_small = 0;  // (q - 1) / 2 under the same condition
};

}  // namespace detail

/// Shared, immutable field descriptor. Elements keep a raw pointer to the
/// descriptor, so a field must outlive every element created from it.
class FqField {
 public:
  FqField() = default;

  /// Validates p (odd prime, below 2^62) and the modulus (monic, irreducible).
  static FqField make(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static FqField prime_field(std::uint64_t p);
  /// For moduli already known to be irreducible (factors from factor_mod_p).
  static FqField make_unchecked(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return data_->p; }
  int degree() const { return data_->r; }
  const Integer& order() const { return data_->q; }
  /// q as a machine integer; throws InvalidArgument if it does not fit.
  std::uint64_t order_u64() const;
  const std::vector<std::uint64_t>& modulus() const { return data_->modulus; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(std::int64_t value) const;
  FqElem from_integer(const Integer& value) const;
  /// Coefficients of any length, reduced modulo p and modulo the field modulus.
  FqElem from_poly(std::span<const std::uint64_t> coeffs) const;
  /// Inverse of FqElem::index().
  FqElem from_index(std::uint64_t index) const;
  /// The class of the polynomial variable.
  FqElem generator() const;

  bool valid() const { return data_ != nullptr; }
  const detail::FieldData* data() const { return data_.get(); }

  friend bool operator==(const FqField& a, const FqField& b);

 private:
  explicit FqField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class FqElem {
 public:
  FqElem() = default;

  const detail::FieldData* field_data() const { return field_; }
  std::uint64_t characteristic() const { return field_->p; }
  int degree() const { return field_->r; }
  std::span<const std::uint64_t> coeffs() const { return {c_.data(), static_cast<std::size_t>(field_->r)}; }

  bool is_zero() const;
  bool is_one() const;
  /// Position in the enumeration order: sum of c_i p^i.
  std::uint64_t index() const;

  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem& operator/=(const FqElem& o);

  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }
  FqElem operator-() const;

  friend bool operator==(const FqElem& a, const FqElem& b);

  FqElem pow(const Integer& exponent) const;
  FqElem pow(std::uint64_t exponent) const;
  FqElem inverse() const;

  /// Multiplication by a rational integer.
  FqElem scaled(std::int64_t k) const;

  /// Element of the same field with the given coefficients (reduced mod p;
  /// at most degree() entries).
  FqElem sibling(std::span<const std::uint64_t> coeffs) const;

 private:
  friend class FqField;
  explicit FqElem(const detail::FieldData* f) : field_(f), c_{} {}

  void check_same_field(const FqElem& o) const;

  const detail::FieldData* field_ = nullptr;
  std::array<std::uint64_t, kMaxExtensionDegree> c_{};
};

/// Legendre symbol on F_q via Euler's criterion: 0 at zero, otherwise
/// u^((q-1)/2) read as +1 or -1.
int quadratic_character(const FqElem& u);

/// All q elements, lexicographic on coefficient vectors with the constant
/// coefficient varying fastest (element i has index() == i).
std::vector<FqElem> enumerate_elements(const FqField& field);

/// "c0,c1,...,c_{r-1}".
std::string format_element(const FqElem& u);

}  // namespace rankforge

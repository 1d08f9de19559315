#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rankforge {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (reduced, positive denominator)

Integer parse_integer(std::string_view text);

/// Accepts "n", "-n" and "n/d"; the Unicode minus sign is treated as '-'.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string format_rational(const Rational& value);

/// Residue of `value` modulo a prime `p` as a value in [0, p). Throws
/// DenominatorNotInvertible when p divides the denominator.
std::uint64_t reduce_mod(const Rational& value, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& value, std::uint64_t p);

inline Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

/// Throws InvalidArgument when the value does not fit.
std::uint64_t to_u64(const Integer& value);

}  // namespace rankforge

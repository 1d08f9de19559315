#pragma once

// Quadratic character sums  S(a, b, c) = sum_{t in F_q} chi(a t^2 + b t + c).

#include "rankforge/finite_field.hpp"
#include "rankforge/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankforge {

struct QuadSumInput {
  FqElem a;
  FqElem b;
  FqElem c;
};

/// Closed form for a != 0: (q - 1) chi(a) when b^2 - 4ac = 0, else -chi(a).
/// Throws ZeroLeadingCoefficient for a = 0.
Integer quad_sum_closed(const QuadSumInput& in);

/// The sum by enumerating every t in F_q; any a, including 0.
Integer quad_sum_brute(const QuadSumInput& in);

/// #{(s, t) in F_q^2 : s^2 = a t^2 + b t + c}, counted from a table of square
/// roots rather than from the character.
Integer conic_count(const QuadSumInput& in);

namespace detail {
/// quad_sum_closed for callers in inner loops; q must fit in 63 bits.
std::int64_t quad_sum_closed_i64(const FqElem& a, const FqElem& b, const FqElem& c);
}  // namespace detail

struct PrimePower {
  std::uint64_t q;
  std::uint64_t p;
  int r;
};

/// Odd prime powers 3 <= q <= max_q, ascending.
std::vector<PrimePower> odd_prime_powers(std::uint64_t max_q);

struct LegendreVerifyRow {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  int r = 0;
  std::string modulus;  // the F_p polynomial used to build F_q
  bool exhaustive = false;
  std::uint64_t triples = 0;
  std::uint64_t mismatches = 0;               // closed != brute
  std::uint64_t conic_identity_failures = 0;  // conic_count != q + brute
  std::uint64_t bound_violations = 0;         // b^2 - 4ac != 0 and conic_count outside [q-1, q+1]
  std::uint64_t degenerate_triples = 0;       // b^2 - 4ac = 0
  std::uint64_t degenerate_outside_bound = 0; // of those, conic_count outside [q-1, q+1]
  bool pass() const { return mismatches == 0 && conic_identity_failures == 0 && bound_violations == 0; }
};

/// Compares the closed form with enumeration for every odd prime power up to
/// max_q, and checks the point count of s^2 = a t^2 + b t + c (between q-1
/// and q+1 when b^2 - 4ac != 0; 1 or 2q-1 when it vanishes): all triples with a != 0 when q <= exhaustive_max_q, otherwise
/// `samples` seeded random triples. Fields use the first irreducible modulus.
std::vector<LegendreVerifyRow> verify_legendre(std::uint64_t max_q, std::uint64_t exhaustive_max_q,
                                               std::uint64_t samples, std::uint64_t seed, int threads = 1);

}  // namespace rankforge

#pragma once

// Traces of Frobenius on the fibres, their average A_P over T in the residue
// field, and the partial sums (1/X) sum_{N(P) <= X} -A_P log N(P).

#include "rankforge/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankforge {

enum class ApMethod { Direct, Analytic };

std::string to_string(ApMethod m);
ApMethod parse_method(std::string_view text);

/// a = -sum_x chi(f(x)) for a cubic over F_q: q + 1 minus the affine point
/// count plus one point at infinity.
Integer trace_of_cubic(const FqPoly& cubic, const FqField& field);

/// a_t(P) for the fibre at T = t.
Integer trace_a_t(const CurveFamily& fam, const PrimeIdeal& prime, const FqElem& t);

struct ApResult {
  PrimeIdeal prime;
  Integer sum_a_t;  // sum over every t in the residue field
  Rational A_p;     // sum_a_t / N(P)
  ApMethod method = ApMethod::Direct;
  bool good = true;
};

/// Sums trace_a_t over all t: O(q^2) character evaluations. Throws BadPrime
/// at bad primes unless allow_bad, in which case the result has good = false.
ApResult average_A_p_direct(const CurveFamily& fam, const PrimeIdeal& prime, bool allow_bad = false);

/// For each x != 0 the t-sum is quadratic in t with leading coefficient x^3
/// and discriminant 4 D_T(x), so the closed Legendre sum applies; the x = 0
/// column (linear in t) is enumerated. O(q) character evaluations.
ApResult average_A_p_analytic(const CurveFamily& fam, const PrimeIdeal& prime, bool allow_bad = false);

/// q * sum of chi(r) over the distinct nonzero roots r of D_T in the residue
/// field, which is -sum_t a_t at good primes.
Integer root_character_sum(const CurveFamily& fam, const PrimeIdeal& prime);

struct RankSeriesRow {
  std::uint64_t X = 0;
  double partial_sum = 0.0;
  std::size_t ideals_used = 0;
  std::size_t ideals_skipped_bad = 0;
};

struct NagaoOptions {
  ApMethod method = ApMethod::Analytic;
  /// The direct method is only used for norms up to this; larger norms use
  /// the analytic method.
  std::uint64_t direct_norm_cap = 1000;
  int threads = 1;
  /// Empty means default_checkpoints(X).
  std::vector<std::uint64_t> checkpoints;
};

/// 1000 * 2^k below X, then X itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t X);

std::vector<RankSeriesRow> nagao_partial_sum(const CurveFamily& fam, std::uint64_t X, const NagaoOptions& opts = {});

struct RankEstimate {
  std::uint64_t X = 0;
  double partial_sum = 0.0;
  double theta_good = 0.0;  // sum of log N(P) over the good primes used
  double normalized = 0.0;  // partial_sum * X / theta_good
  long nearest_integer = 0;
  double residual = 0.0;    // normalized - nearest_integer
  std::size_t ideals_used = 0;
  std::size_t ideals_skipped_bad = 0;
  bool low_confidence = false;
};

RankEstimate rank_estimate(const CurveFamily& fam, std::uint64_t X, const NagaoOptions& opts = {});

}  // namespace rankforge

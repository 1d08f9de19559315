#include "rankforge/nagao.hpp"

#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/legendre.hpp"
#include "rankforge/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace rankforge {

namespace {

struct PrimeContribution {
  bool good = false;
  Integer sum_a_t;
};

std::int64_t character_sum_of_cubic(const FqPoly& f, const FqField& field) {
  const std::uint64_t q = field.order_u64();
  std::int64_t s = 0;
  for (std::uint64_t i = 0; i < q; ++i) s += quadratic_character(f.eval(field.from_index(i)));
  return s;
}

FqElem eval_coeffs(const std::vector<FqElem>& c, const FqElem& x) {
  FqElem acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc *= x;
    acc += c[k];
  }
  return acc;
}

void require_good(const CurveFamily& fam, const PrimeIdeal& prime, bool allow_bad, bool& good) {
  const PrimeCheck check = is_good_prime(fam, prime);
  good = check.good();
  if (!good && !allow_bad) throw Error(ErrorCode::BadPrime, check.reason);
}

ApResult finish(const PrimeIdeal& prime, Integer sum_a_t, ApMethod method, bool good) {
  ApResult r;
  r.prime = prime;
  r.sum_a_t = std::move(sum_a_t);
  r.A_p = Rational(r.sum_a_t, to_integer(prime.norm));
  r.A_p.canonicalize();
  r.method = method;
  r.good = good;
  return r;
}

}  // namespace

std::string to_string(ApMethod m) { return m == ApMethod::Direct ? "direct" : "analytic"; }

ApMethod parse_method(std::string_view text) {
  if (text == "direct") return ApMethod::Direct;
  if (text == "analytic") return ApMethod::Analytic;
  throw Error(ErrorCode::Parse, "unknown method '" + std::string(text) + "'");
}

Integer trace_of_cubic(const FqPoly& cubic, const FqField& field) {
  return Integer(static_cast<long>(-character_sum_of_cubic(cubic, field)));
}

Integer trace_a_t(const CurveFamily& fam, const PrimeIdeal& prime, const FqElem& t) {
  return trace_of_cubic(fiber_polynomial(fam, prime, t), prime.residue_field);
}

ApResult average_A_p_direct(const CurveFamily& fam, const PrimeIdeal& prime, bool allow_bad) {
  bool good = true;
  require_good(fam, prime, allow_bad, good);
  const ReducedFamily red = reduce_family(fam, prime);
  const FqField& field = prime.residue_field;
  const std::uint64_t q = field.order_u64();
  std::int64_t total = 0;
  for (std::uint64_t i = 0; i < q; ++i) total -= character_sum_of_cubic(fiber_polynomial(red, field.from_index(i)), field);
  return finish(prime, Integer(static_cast<long>(total)), ApMethod::Direct, good);
}

ApResult average_A_p_analytic(const CurveFamily& fam, const PrimeIdeal& prime, bool allow_bad) {
  bool good = true;
  require_good(fam, prime, allow_bad, good);
  const ReducedFamily red = reduce_family(fam, prime);
  const FqField& field = prime.residue_field;
  const std::uint64_t q = field.order_u64();
  // column x = 0: f(0, t) = 2 c t - D, linear in t
  std::int64_t double_sum =
      quad_sum_brute({field.zero(), red.g[0].scaled(2), -red.h[0]}).get_si();
  for (std::uint64_t i = 1; i < q; ++i) {
    const FqElem x = field.from_index(i);
    const FqElem x3 = x * x * x;
    double_sum += detail::quad_sum_closed_i64(x3, eval_coeffs(red.g, x).scaled(2), -eval_coeffs(red.h, x));
  }
  return finish(prime, Integer(static_cast<long>(-double_sum)), ApMethod::Analytic, good);
}

Integer root_character_sum(const CurveFamily& fam, const PrimeIdeal& prime) {
  const ReducedFamily red = reduce_family(fam, prime);
  long s = 0;
  for (const auto& root : roots_in_fq(FqPoly(red.D_T), prime.residue_field))
    if (!root.value.is_zero()) s += quadratic_character(root.value);
  return to_integer(prime.norm) * s;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t X) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1000; c < X; c *= 2) out.push_back(c);
  out.push_back(X);
  return out;
}

std::vector<RankSeriesRow> nagao_partial_sum(const CurveFamily& fam, std::uint64_t X, const NagaoOptions& opts) {
  if (X < 2) throw Error(ErrorCode::InvalidArgument, "nagao_partial_sum needs X >= 2");
  std::vector<std::uint64_t> checkpoints = opts.checkpoints.empty() ? default_checkpoints(X) : opts.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  const std::uint64_t limit = std::max(X, checkpoints.back());

  const auto ideals = enumerate_prime_ideals(fam.spec.field, limit, opts.threads).ideals;
  std::vector<PrimeContribution> contrib(ideals.size());
  parallel_for(ideals.size(), opts.threads, [&](std::size_t i) {
    const PrimeIdeal& P = ideals[i];
    if (!is_good_prime(fam, P).good()) return;
    const bool direct = opts.method == ApMethod::Direct && P.norm <= opts.direct_norm_cap;
    const ApResult r = direct ? average_A_p_direct(fam, P) : average_A_p_analytic(fam, P);
    contrib[i] = {true, r.sum_a_t};
  });

  std::vector<RankSeriesRow> rows;
  CompensatedSum acc;
  std::size_t used = 0, skipped = 0, next = 0;
  for (std::uint64_t cp : checkpoints) {
    while (next < ideals.size() && ideals[next].norm <= cp) {
      if (contrib[next].good) {
        const double norm = static_cast<double>(ideals[next].norm);
        // -A_P log N(P) with A_P = sum_a_t / N(P)
        acc.add(-contrib[next].sum_a_t.get_d() / norm * std::log(norm));
        ++used;
      } else {
        ++skipped;
      }
      ++next;
    }
    rows.push_back({cp, acc.value() / static_cast<double>(cp), used, skipped});
  }
  return rows;
}

RankEstimate rank_estimate(const CurveFamily& fam, std::uint64_t X, const NagaoOptions& opts) {
  NagaoOptions o = opts;
  o.checkpoints = {X};
  const auto rows = nagao_partial_sum(fam, X, o);
  RankEstimate est;
  est.X = X;
  est.partial_sum = rows.back().partial_sum;
  est.ideals_used = rows.back().ideals_used;
  est.ideals_skipped_bad = rows.back().ideals_skipped_bad;
  CompensatedSum theta;
  for (const auto& P : enumerate_prime_ideals(fam.spec.field, X, opts.threads).ideals)
    if (is_good_prime(fam, P).good()) theta.add(std::log(static_cast<double>(P.norm)));
  est.theta_good = theta.value();
  if (est.ideals_used == 0 || est.theta_good <= 0.0) {
    est.low_confidence = true;
    return est;
  }
  est.normalized = est.partial_sum * static_cast<double>(X) / est.theta_good;
  est.nearest_integer = std::lround(est.normalized);
  est.residual = est.normalized - static_cast<double>(est.nearest_integer);
  return est;
}

}  // namespace rankforge

// Runs the eight acceptance criteria at their stated sizes and tolerances and
// prints one line per criterion. Exit status is 0 iff every criterion has its
// recorded outcome: PASS, or FAIL for the entries in kExpectedFailures.

#include "rankforge/cli.hpp"
#include "rankforge/error.hpp"
#include "rankforge/family.hpp"
#include "rankforge/legendre.hpp"
#include "rankforge/nagao.hpp"
#include "rankforge/primes.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rankforge;

namespace {

// Criterion 2 asks for q-1 <= #C <= q+1 on every a != 0 triple, but a triple
// with b^2 = 4ac gives #C = 1 or 2q-1, so the literal statement cannot hold.
const std::set<int> kExpectedFailures = {2};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t g_seed = kDefaultSeed;

NumberField rationals() { return NumberField::rationals(); }
NumberField gaussian() { return NumberField::make(parse_integer_poly("1,0,1")); }
NumberField sqrt5() { return NumberField::make(parse_integer_poly("-1,-1,1")); }

CurveFamily family6(const NumberField& K) {
  FamilySpec s;
  s.field = K;
  for (int i = 1; i <= 6; ++i) s.rho.push_back(K.from_rational(Rational(i)));
  s.alpha = K.one();
  return construct_family(s);
}

std::vector<LegendreVerifyRow> g_rows;

Outcome legendre_oracle() {
  g_rows = verify_legendre(343, 49, 1000, g_seed, 1);
  std::uint64_t triples = 0, mismatches = 0, exhaustive = 0;
  for (const auto& r : g_rows) {
    triples += r.triples;
    mismatches += r.mismatches + r.conic_identity_failures;
    exhaustive += r.exhaustive;
  }
  std::ostringstream s;
  s << g_rows.size() << " fields (" << exhaustive << " exhaustive), " << triples << " triples, " << mismatches
    << " mismatches";
  return {mismatches == 0, s.str()};
}

Outcome conic_bound() {
  std::uint64_t triples = 0, violations = 0, nondegenerate_violations = 0, degenerate = 0;
  for (const auto& r : g_rows) {
    triples += r.triples;
    violations += r.bound_violations + r.degenerate_outside_bound;
    nondegenerate_violations += r.bound_violations;
    degenerate += r.degenerate_triples;
  }
  std::ostringstream s;
  s << violations << " violations in " << triples << " triples; all " << violations - nondegenerate_violations
    << " lie among the " << degenerate << " triples with b^2 = 4ac (count 1 or 2q-1); b^2 != 4ac: "
    << nondegenerate_violations << " violations";
  return {violations == 0, s.str()};
}

Outcome central_identity_q() {
  const CurveFamily fam = family6(rationals());
  std::size_t good = 0, direct = 0, exceptions = 0;
  for (const auto& P : enumerate_prime_ideals(fam.spec.field, 2000).ideals) {
    if (!is_good_prime(fam, P).good()) continue;
    ++good;
    const ApResult a = average_A_p_analytic(fam, P);
    if (a.A_p != -6) ++exceptions;
    if (P.norm <= 200) {
      ++direct;
      if (average_A_p_direct(fam, P).sum_a_t != a.sum_a_t) ++exceptions;
    }
  }
  std::ostringstream s;
  s << good << " good primes <= 2000 analytic, " << direct << " <= 200 direct, " << exceptions << " exceptions";
  return {exceptions == 0 && good > 0, s.str()};
}

Outcome central_identity_sqrt5() {
  const CurveFamily fam = family6(sqrt5());
  std::size_t split = 0, inert = 0, direct = 0, exceptions = 0;
  for (const auto& P : enumerate_prime_ideals(fam.spec.field, 2000).ideals) {
    if (!is_good_prime(fam, P).good()) continue;
    (P.f == 1 ? split : inert) += 1;
    const ApResult a = average_A_p_analytic(fam, P);
    if (a.A_p != -6) ++exceptions;
    if (P.norm <= 200) {
      ++direct;
      if (average_A_p_direct(fam, P).sum_a_t != a.sum_a_t) ++exceptions;
    }
  }
  std::ostringstream s;
  s << split << " split and " << inert << " inert good ideals of norm <= 2000, " << direct << " also direct, "
    << exceptions << " exceptions";
  return {exceptions == 0 && split > 0 && inert > 0, s.str()};
}

Outcome rank_convergence() {
  const CurveFamily fam = family6(rationals());
  const std::uint64_t X = 10000;
  // theta(X) by trial division, independent of the sieve and the ideal enumeration
  double theta = 0;
  for (std::uint64_t n = 2; n <= X; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) theta += std::log(static_cast<double>(n));
  }
  const RankEstimate r = rank_estimate(fam, X);
  double bad_logs = 0;
  for (std::uint64_t p : primes_up_to(X)) {
    if (p == 2 || !is_good_prime(fam, primes_above(fam.spec.field, p)[0]).good()) bad_logs += std::log(double(p));
  }
  const double expected = 6 * (theta - bad_logs) / static_cast<double>(X);
  const bool ok = std::abs(r.partial_sum - 6) <= 0.3 && r.nearest_integer == 6 &&
                  std::abs(r.partial_sum - expected) < 1e-9;
  std::ostringstream s;
  s << "partial_sum " << cli::format_double(r.partial_sum) << " (6 theta_good/X = " << cli::format_double(expected)
    << ", theta(X)/X = " << cli::format_double(theta / X) << "), normalized " << cli::format_double(r.normalized)
    << ", rank estimate " << r.nearest_integer;
  return {ok, s.str()};
}

Outcome landau() {
  bool ok = true;
  std::ostringstream s;
  const std::pair<const char*, NumberField> fields[] = {{"Q", rationals()}, {"Q(i)", gaussian()}, {"Q(sqrt5)", sqrt5()}};
  for (const auto& [name, K] : fields) {
    const LandauResult r = landau_sum(K, 1000000, 1);
    ok = ok && r.ratio >= 0.95 && r.ratio <= 1.05;
    s << name << " " << cli::format_double(r.ratio) << "  ";
  }
  std::string d = s.str();
  d.erase(d.find_last_not_of(' ') + 1);
  return {ok, "ratios " + d};
}

Outcome splitting_law() {
  const NumberField K = gaussian();
  std::size_t tested = 0, mismatches = 0;
  for (std::uint64_t p : primes_up_to(10000)) {
    if (p == 2) continue;
    ++tested;
    const auto ps = primes_above(K, p);
    const bool split = ps.size() == 2 && ps[0].f == 1 && ps[1].f == 1 && ps[0].e == 1;
    const bool inert = ps.size() == 1 && ps[0].f == 2;
    if (split != (p % 4 == 1) || inert != (p % 4 == 3)) ++mismatches;
  }
  std::ostringstream s;
  s << tested << " odd primes, " << mismatches << " mismatches";
  return {mismatches == 0, s.str()};
}

Outcome construction_identity() {
  std::mt19937_64 rng(g_seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  std::size_t failures = 0, rejected_draws = 0;
  auto check_family = [&](const CurveFamily& fam) {
    const KPoly x3 = KPoly::monomial(fam.spec.field.one(), 3);
    const KPoly diff = fam.g * fam.g + x3 * fam.h - expand_from_roots<KElem>(fam.roots, fam.A);
    if (!diff.is_zero()) ++failures;
  };
  auto run = [&](const NumberField& K, int count) {
    int built = 0;
    while (built < count) {
      FamilySpec s;
      s.field = K;
      auto draw = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < K.degree(); ++i) {
          Rational x(num(rng), den(rng));
          x.canonicalize();
          c.push_back(x);
        }
        return K.element(c);
      };
      for (int i = 0; i < 6; ++i) s.rho.push_back(draw());
      s.alpha = draw();
      try {
        check_family(construct_family(s));
        ++built;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::RepeatedRoot || e.code() == ErrorCode::ZeroRoot || e.code() == ErrorCode::ZeroAlpha)
          ++rejected_draws;
        else
          ++failures, ++built;
      }
    }
  };
  run(rationals(), 100);
  run(sqrt5(), 25);

  std::size_t rejections = 0;
  auto expect = [&](const NumberField& K, std::vector<long> rho, ErrorCode code) {
    FamilySpec s;
    s.field = K;
    for (long r : rho) s.rho.push_back(K.from_rational(Rational(r)));
    s.alpha = K.one();
    try {
      construct_family(s);
      ++failures;
    } catch (const Error& e) {
      if (e.code() == code)
        ++rejections;
      else
        ++failures;
    }
  };
  expect(rationals(), {1, -1, 2, 3, 4, 5}, ErrorCode::RepeatedRoot);
  expect(rationals(), {0, 1, 2, 3, 4, 5}, ErrorCode::ZeroRoot);
  expect(sqrt5(), {7, 2, 3, 4, 5, -7}, ErrorCode::RepeatedRoot);
  expect(sqrt5(), {1, 2, 3, 0, 5, 6}, ErrorCode::ZeroRoot);

  std::ostringstream s;
  s << "125 families (100 over Q, 25 over Q(sqrt5)), " << failures << " failures; " << rejections
    << "/4 invalid specs rejected; " << rejected_draws << " random draws rejected";
  return {failures == 0 && rejections == 4, s.str()};
}

}  // namespace

int main() {
  try {
    g_seed = cli::effective_seed(kDefaultSeed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "RANKFORGE_SEED: %s\n", e.what());
    return 2;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed form equals enumeration (q <= 343)", legendre_oracle},
      {"conic bound q-1 <= #C <= q+1 for all a != 0", conic_bound},
      {"A_p = -6 over Q (p <= 2000; direct p <= 200)", central_identity_q},
      {"A_p = -6 over Q(sqrt5) (norm <= 2000)", central_identity_sqrt5},
      {"rank-6 partial sum at X = 10^4", rank_convergence},
      {"Landau ratio at 10^6 in [0.95, 1.05]", landau},
      {"splitting law in Q(i) for p <= 10^4", splitting_law},
      {"construction identity on random specs", construction_identity},
  };
  bool as_recorded = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected_fail = kExpectedFailures.count(id) > 0;
    as_recorded = as_recorded && (o.pass != expected_fail);
    std::printf("criterion %d: %s  %s: %s [%.1f s]%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs, !o.pass && expected_fail ? " (known: unattainable as stated)" : "");
    std::fflush(stdout);
  }
  return as_recorded ? 0 : 1;
}

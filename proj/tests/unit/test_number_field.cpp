#include "support.hpp"

#include "rankforge/number_field.hpp"
#include "rankforge/primes.hpp"

#include <cmath>
#include <random>

using namespace rankforge;
using namespace testing_support;

namespace {

NumberField field(const char* m, std::optional<std::vector<std::uint64_t>> excluded = {}, bool assert_irr = false) {
  return NumberField::make(parse_integer_poly(m), std::move(excluded), assert_irr);
}

std::vector<std::uint64_t> norms(const IdealEnumeration& en) {
  std::vector<std::uint64_t> out;
  for (const auto& P : en.ideals) out.push_back(P.norm);
  return out;
}

bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

KElem random_element(const NumberField& K, std::mt19937_64& rng, bool with_denominators) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> c;
  for (int i = 0; i < K.degree(); ++i) c.emplace_back(num(rng), with_denominators ? den(rng) : 1);
  for (auto& x : c) x.canonicalize();
  return K.element(c);
}

}  // namespace

TEST_CASE("field construction and discriminant") {
  CHECK(field("1,0,1").discriminant() == -4);
  CHECK(field("-1,-1,1").discriminant() == 5);
  CHECK(field("-2,0,0,1").discriminant() == -108);
  CHECK(NumberField::rationals().degree() == 1);
  CHECK_CODE(field("-1,0,1"), ErrorCode::NotIrreducible);
  CHECK_CODE(field("-6,11,-6,1"), ErrorCode::NotIrreducible);  // (x-1)(x-2)(x-3)
  CHECK_CODE(field("1,2,1"), ErrorCode::NotIrreducible);
  CHECK_CODE(field("1,0,2"), ErrorCode::InvalidArgument);
  CHECK_CODE(field("1,0,0,0,1"), ErrorCode::NotIrreducible);  // x^4 + 1 splits mod every prime
  CHECK(field("1,0,0,0,1", {}, true).degree() == 4);
  CHECK(field("-2,0,0,0,1").degree() == 4);
}

TEST_CASE("element arithmetic") {
  const NumberField K = field("1,0,1");
  const KElem i = K.theta();
  CHECK(i * i == -K.one());
  const KElem u = K.one() + i;
  CHECK(u.norm() == 2);
  CHECK(u * u.inverse() == K.one());
  CHECK((u / u) == K.one());
  CHECK(K.parse_element("1/2,-3").to_string() == "1/2,-3");
  CHECK(K.parse_element("5").to_string() == "5,0");
  CHECK(K.parse_element("1/2,1/3").denominator() == 6);
  CHECK_CODE(K.parse_element("1,2,3"), ErrorCode::Parse);
  CHECK_CODE(K.zero().inverse(), ErrorCode::DivisionByZero);
  const NumberField L = field("-1,-1,1");
  CHECK_CODE(K.one() + L.one(), ErrorCode::DomainMismatch);
  const KElem phi = L.theta();
  CHECK(phi * phi == phi + L.one());
  CHECK(phi.norm() == -1);
  // N(a + b theta) over Q(theta), theta^3 = 2: a^3 + 2 b^3 + 4 c^3 - 6abc
  const NumberField C = field("-2,0,0,1");
  const KElem x = C.element({Rational(1), Rational(1), Rational(0)});
  CHECK(x.norm() == 3);
}

TEST_CASE("prime ideal enumeration examples") {
  const NumberField Qi = field("1,0,1");
  CHECK(norms(enumerate_prime_ideals(Qi, 10)) == std::vector<std::uint64_t>{5, 5, 9});
  CHECK(norms(enumerate_prime_ideals(NumberField::rationals(), 10)) == std::vector<std::uint64_t>{3, 5, 7});
  const NumberField Q5 = field("-1,-1,1");
  CHECK(Q5.is_excluded(5));
  CHECK(Q5.is_excluded(2));
  CHECK_FALSE(Q5.is_excluded(11));
  const auto above11 = primes_above(Q5, 11);
  REQUIRE(above11.size() == 2);
  CHECK(above11[0].norm == 11);
  CHECK(above11[0].factor_text() == "3,1");  // x - 8
  CHECK(above11[1].factor_text() == "7,1");  // x - 4
  CHECK(primes_above(Q5, 5).empty());
  const auto en = enumerate_prime_ideals(Q5, 100);
  CHECK(en.excluded_primes == 2);
  for (std::size_t k = 1; k < en.ideals.size(); ++k) CHECK(en.ideals[k - 1].norm <= en.ideals[k].norm);
}

TEST_CASE("explicit excluded primes") {
  const NumberField K = field("1,0,1", std::vector<std::uint64_t>{13});
  CHECK(K.is_excluded(2));
  CHECK(K.is_excluded(13));
  CHECK_FALSE(K.is_excluded(5));
  const auto n = norms(enumerate_prime_ideals(K, 20));
  CHECK(n == std::vector<std::uint64_t>{5, 5, 9, 17, 17});
}

TEST_CASE("enumeration is independent of thread count") {
  const NumberField K = field("-2,0,0,1");
  const auto a = enumerate_prime_ideals(K, 5000, 1);
  const auto b = enumerate_prime_ideals(K, 5000, 4);
  REQUIRE(a.ideals.size() == b.ideals.size());
  for (std::size_t k = 0; k < a.ideals.size(); ++k) {
    CHECK(a.ideals[k].norm == b.ideals[k].norm);
    CHECK(a.ideals[k].factor_text() == b.ideals[k].factor_text());
  }
}

TEST_CASE("residue degrees account for the full degree") {
  for (const char* m : {"1,0,1", "-1,-1,1", "-2,0,0,1", "-2,0,0,0,1", "1,1,0,1"}) {
    const NumberField K = field(m);
    for (std::uint64_t p : primes_up_to(400)) {
      if (K.is_excluded(p)) continue;
      int total = 0;
      for (const auto& P : primes_above(K, p)) {
        total += P.e * P.f;
        std::uint64_t pf = 1;
        for (int i = 0; i < P.f; ++i) pf *= p;
        CHECK(P.norm == pf);
        CHECK(P.residue_field.order() == P.norm);
      }
      CHECK_MESSAGE(total == K.degree(), m << " at p = " << p);
    }
  }
}

TEST_CASE("reduce examples") {
  const NumberField Qi = field("1,0,1");
  const auto above5 = primes_above(Qi, 5);
  REQUIRE(above5.size() == 2);
  const PrimeIdeal& P = above5[1];  // x - 2, theta -> 2
  CHECK(P.theta_image == P.residue_field.from_int(2));
  const KElem x = Qi.element({Rational(1, 3), Rational(1, 3)});
  CHECK(reduce(x, P) == P.residue_field.one());
  CHECK_CODE(reduce(Qi.from_rational(Rational(1, 5)), P), ErrorCode::DenominatorNotInvertible);
  const auto above3 = primes_above(Qi, 3);
  REQUIRE(above3.size() == 1);
  CHECK(above3[0].norm == 9);
  CHECK(reduce(Qi.from_rational(Rational(7)), above3[0]) == above3[0].residue_field.one());
}

TEST_CASE("reduce is a ring homomorphism") {
  std::mt19937_64 rng(99);
  for (const char* m : {"0,1", "1,0,1", "-1,-1,1", "-2,0,0,1"}) {
    const NumberField K = field(m);
    const auto ideals = enumerate_prime_ideals(K, 400).ideals;
    std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
    int failures = 0;
    int tested = 0;
    while (tested < 1000) {
      const PrimeIdeal& P = ideals[pick(rng)];
      const KElem x = random_element(K, rng, true);
      const KElem y = random_element(K, rng, true);
      if (x.denominator() % P.p == 0 || y.denominator() % P.p == 0) continue;
      ++tested;
      if (!(reduce(x + y, P) == reduce(x, P) + reduce(y, P))) ++failures;
      if (!(reduce(x * y, P) == reduce(x, P) * reduce(y, P))) ++failures;
      if (!(reduce(x - y, P) == reduce(x, P) - reduce(y, P))) ++failures;
    }
    CHECK_MESSAGE(failures == 0, m);
  }
}

TEST_CASE("Gaussian splitting law up to 10^4") {
  const NumberField Qi = field("1,0,1");
  int mismatches = 0;
  for (std::uint64_t p : primes_up_to(10000)) {
    if (p == 2) continue;
    bool has_root = false;
    for (std::uint64_t x = 1; x < p && !has_root; ++x) has_root = (x * x + 1) % p == 0;
    const auto ps = primes_above(Qi, p);
    const bool split = ps.size() == 2 && ps[0].f == 1 && ps[1].f == 1;
    const bool inert = ps.size() == 1 && ps[0].f == 2;
    if (has_root != (p % 4 == 1)) ++mismatches;
    if (split != (p % 4 == 1) || inert != (p % 4 == 3)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("landau sums against direct summation") {
  double theta100 = 0.0;
  for (std::uint64_t n = 3; n <= 100; ++n)
    if (prime_by_trial_division(n)) theta100 += std::log(static_cast<double>(n));
  const auto r = landau_sum(NumberField::rationals(), 100);
  CHECK(r.sum == doctest::Approx(theta100).epsilon(1e-12));
  CHECK(r.count == 24);
  CHECK(r.sum == doctest::Approx(83.0346).epsilon(1e-5));
  CHECK(landau_sum(NumberField::rationals(), 1).sum == 0.0);

  const double qi25 = 2 * std::log(5.0) + std::log(9.0) + 2 * std::log(13.0) + 2 * std::log(17.0);
  const auto g = landau_sum(field("1,0,1"), 25);
  CHECK(g.sum == doctest::Approx(qi25).epsilon(1e-12));
  CHECK(g.count == 7);
  CHECK(g.ratio == doctest::Approx(qi25 / 25).epsilon(1e-12));

  for (const char* m : {"0,1", "1,0,1", "-1,-1,1"}) {
    const auto big = landau_sum(field(m), 100000, 2);
    CHECK_MESSAGE(big.ratio > 0.95, m);
    CHECK_MESSAGE(big.ratio < 1.05, m);
  }
}

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1000.0);
}

TEST_CASE("determinant") {
  std::vector<std::vector<Rational>> m{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(determinant(m) == -1);
  m = {{Rational(1, 2), Rational(3)}, {Rational(2), Rational(4)}};
  CHECK(determinant(m) == -4);
}

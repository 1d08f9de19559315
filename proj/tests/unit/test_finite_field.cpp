#include "support.hpp"

#include <random>

using namespace rankforge;
using namespace testing_support;

TEST_CASE("field construction") {
  CHECK(FqField::make(7, {0, 1}).order() == 7);
  const FqField F9 = FqField::make(3, {1, 0, 1});
  CHECK(F9.order() == 9);
  CHECK(F9.degree() == 2);
  CHECK_CODE(FqField::make(5, {4, 0, 1}), ErrorCode::ReducibleModulus);  // x^2 - 1
  CHECK_CODE(FqField::make(9, {0, 1}), ErrorCode::CompositeCharacteristic);
  CHECK_CODE(FqField::make(2, {1, 1, 1}), ErrorCode::CompositeCharacteristic);
  CHECK_CODE(FqField::make(7, {1, 0, 2}), ErrorCode::ReducibleModulus);  // not monic
  CHECK_CODE(FqField::make(3, std::vector<std::uint64_t>(kMaxExtensionDegree + 2, 1)), ErrorCode::UnsupportedDegree);
}

TEST_CASE("arithmetic in F_9 with theta^2 = -1") {
  const FqField F = FqField::make(3, {1, 0, 1});
  const FqElem theta = F.generator();
  CHECK(theta * theta == F.from_int(2));
  const FqElem u = F.one() + theta;
  CHECK(u.pow(std::uint64_t{4}) == F.from_int(2));
  CHECK(u.pow(Integer(4)) == F.from_int(2));
  CHECK(quadratic_character(u) == -1);
  CHECK(u / u == F.one());
  CHECK(u * u.inverse() == F.one());
  CHECK_CODE(F.zero().inverse(), ErrorCode::DivisionByZero);
  CHECK_CODE(u / F.zero(), ErrorCode::DivisionByZero);
}

TEST_CASE("prime field examples") {
  const FqField F7 = FqField::prime_field(7);
  CHECK(F7.from_int(3).pow(std::uint64_t{6}) == F7.one());
  CHECK(quadratic_character(F7.from_int(2)) == 1);
  CHECK(quadratic_character(F7.from_int(3)) == -1);
  CHECK(quadratic_character(F7.zero()) == 0);
  CHECK(F7.from_int(-1) == F7.from_int(6));
  CHECK(F7.from_integer(Integer("100000000000000000001")) == F7.from_int(static_cast<std::int64_t>(
                                                                  Integer(Integer("100000000000000000001") % 7).get_si())));
  int sum = 0;
  for (const auto& u : enumerate_elements(F7)) sum += quadratic_character(u);
  CHECK(sum == 0);
}

TEST_CASE("mixing fields is rejected") {
  const FqField F7 = FqField::prime_field(7);
  const FqField F11 = FqField::prime_field(11);
  CHECK_CODE(F7.one() + F11.one(), ErrorCode::FieldMismatch);
  CHECK_CODE(F7.one() * F11.one(), ErrorCode::FieldMismatch);
  CHECK_FALSE(F7.one() == F11.one());
  // same field, different moduli
  const FqField A = FqField::make(3, {1, 0, 1});
  const FqField B = FqField::make(3, {2, 1, 1});
  CHECK_CODE(A.one() - B.one(), ErrorCode::FieldMismatch);
}

TEST_CASE("enumeration order") {
  const auto F3 = enumerate_elements(FqField::prime_field(3));
  REQUIRE(F3.size() == 3);
  for (std::uint64_t i = 0; i < 3; ++i) CHECK(F3[i].index() == i);
  const FqField F9 = FqField::make(3, {1, 0, 1});
  const auto all = enumerate_elements(F9);
  REQUIRE(all.size() == 9);
  CHECK(all[0].is_zero());
  CHECK(format_element(all[5]) == "2,1");
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].index() == i);
    CHECK(F9.from_index(i) == all[i]);
    seen.insert(all[i].index());
  }
  CHECK(seen.size() == 9);
}

TEST_CASE("character properties, exhaustive for q <= 49") {
  for (const auto& F : fields_up_to(49)) {
    CAPTURE(F.order());
    const auto elems = enumerate_elements(F);
    const auto squares = square_indices(F);
    const std::uint64_t q = F.order_u64();
    CHECK(squares.size() == (q - 1) / 2);
    int sum = 0;
    for (const auto& u : elems) {
      const int cu = quadratic_character(u);
      CHECK(cu == chi_oracle(squares, u));
      sum += cu;
      CHECK(u.pow(F.order()) == u);
      if (!u.is_zero()) CHECK(quadratic_character(u * u) == 1);
      for (const auto& v : elems) {
        if (u.is_zero() || v.is_zero()) continue;
        if (quadratic_character(u * v) != cu * quadratic_character(v)) FAIL_CHECK("multiplicativity at q = " << q);
      }
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("character properties, sampled for 49 < q <= 343") {
  std::mt19937_64 rng(20240611);
  for (const auto& F : fields_up_to(343)) {
    const std::uint64_t q = F.order_u64();
    if (q <= 49) continue;
    CAPTURE(q);
    const auto squares = square_indices(F);
    CHECK(squares.size() == (q - 1) / 2);
    std::uniform_int_distribution<std::uint64_t> pick(1, q - 1);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const FqElem u = F.from_index(pick(rng));
      const FqElem v = F.from_index(pick(rng));
      if (quadratic_character(u * v) != quadratic_character(u) * quadratic_character(v)) ++bad;
      if (quadratic_character(u) != chi_oracle(squares, u)) ++bad;
      if (!(u.pow(F.order()) == u)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("field axioms spot checks") {
  std::mt19937_64 rng(7);
  for (const auto& F : fields_up_to(125)) {
    const std::uint64_t q = F.order_u64();
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (int i = 0; i < 200; ++i) {
      const FqElem a = F.from_index(pick(rng)), b = F.from_index(pick(rng)), c = F.from_index(pick(rng));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == F.zero());
      CHECK(-a + a == F.zero());
      CHECK(a.scaled(3) == a + a + a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("large characteristic") {
  const std::uint64_t p = 4611686018427387847ULL;  // largest prime below 2^62
  const FqField F = FqField::prime_field(p);
  const FqElem x = F.from_int(123456789);
  CHECK(x.pow(Integer(p)) == x);
  CHECK(x * x.inverse() == F.one());
  CHECK(quadratic_character(x * x) == 1);
}

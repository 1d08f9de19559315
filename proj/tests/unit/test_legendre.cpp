#include "support.hpp"

using namespace rankforge;
using namespace testing_support;

namespace {

QuadSumInput triple(const FqField& F, long a, long b, long c) { return {F.from_int(a), F.from_int(b), F.from_int(c)}; }

}  // namespace

TEST_CASE("closed form examples") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const FqField F = FqField::prime_field(p);
    CHECK(quad_sum_closed(triple(F, 1, 0, 0)) == static_cast<long>(p) - 1);
  }
  CHECK(quad_sum_closed(triple(FqField::prime_field(5), 1, 0, -1)) == -1);
  CHECK(quad_sum_closed(triple(FqField::prime_field(7), 3, 0, 0)) == -6);
  CHECK_CODE(quad_sum_closed(triple(FqField::prime_field(7), 0, 1, 0)), ErrorCode::ZeroLeadingCoefficient);
  const FqField F7 = FqField::prime_field(7);
  const FqField F11 = FqField::prime_field(11);
  CHECK_CODE(quad_sum_closed({F7.one(), F11.one(), F7.one()}), ErrorCode::FieldMismatch);
  CHECK_CODE(quad_sum_brute({F7.one(), F11.one(), F7.one()}), ErrorCode::FieldMismatch);
}

TEST_CASE("brute force and conic examples") {
  const FqField F9 = FqField::make(3, {1, 0, 1});
  CHECK(quad_sum_brute(triple(F9, 1, 0, 0)) == 8);
  CHECK(quad_sum_brute(triple(FqField::prime_field(7), 0, 1, 0)) == 0);
  CHECK(quad_sum_brute(triple(FqField::prime_field(5), 1, 0, -1)) == -1);
  CHECK(conic_count(triple(FqField::prime_field(5), 1, 0, -1)) == 4);
  CHECK(conic_count(triple(FqField::prime_field(7), 1, 0, 0)) == 13);
  CHECK(conic_count(triple(FqField::prime_field(3), 0, 0, 1)) == 6);
}

TEST_CASE("closed form against a table-driven oracle, exhaustive for q <= 27") {
  for (const auto& F : fields_up_to(27)) {
    const std::uint64_t q = F.order_u64();
    CAPTURE(q);
    const auto elems = enumerate_elements(F);
    const auto squares = square_indices(F);
    int mismatches = 0, identity = 0, bound = 0, degenerate_bound = 0;
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        for (const auto& c : elems) {
          long s = 0;
          long points = 0;
          for (const auto& t : elems) {
            const FqElem v = a * t * t + b * t + c;
            s += chi_oracle(squares, v);
            for (const auto& y : elems) points += (y * y == v);
          }
          const QuadSumInput in{a, b, c};
          if (a.is_zero()) {
            if (!b.is_zero() && s != 0) ++mismatches;
            if (quad_sum_brute(in) != s) ++mismatches;
            continue;
          }
          if (quad_sum_closed(in) != s || quad_sum_brute(in) != s) ++mismatches;
          if (conic_count(in) != points || points != static_cast<long>(q) + s) ++identity;
          const bool degenerate = (b * b - a * c.scaled(4)).is_zero();
          const bool inside = points + 1 >= static_cast<long>(q) && points <= static_cast<long>(q) + 1;
          if (!degenerate && !inside) ++bound;
          if (degenerate && inside) ++degenerate_bound;
        }
      }
    }
    CHECK(mismatches == 0);
    CHECK(identity == 0);
    CHECK(bound == 0);
    CHECK(degenerate_bound == 0);  // a degenerate conic has 1 or 2q-1 points
  }
}

TEST_CASE("odd prime powers") {
  const auto pp = odd_prime_powers(30);
  std::vector<std::uint64_t> qs;
  for (const auto& x : pp) qs.push_back(x.q);
  CHECK(qs == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
  CHECK(pp[3].p == 3);
  CHECK(pp[3].r == 2);
  CHECK(odd_prime_powers(343).size() == 78);
}

TEST_CASE("verify_legendre sweep") {
  const auto rows = verify_legendre(125, 27, 300, 11);
  REQUIRE(rows.size() == odd_prime_powers(125).size());
  for (const auto& r : rows) {
    CAPTURE(r.q);
    CHECK(r.pass());
    if (r.q <= 27) {
      CHECK(r.exhaustive);
      CHECK(r.triples == (r.q - 1) * r.q * r.q);
      // b^2 = 4ac has q - 1 choices of a times q choices of b
      CHECK(r.degenerate_triples == (r.q - 1) * r.q);
      CHECK(r.degenerate_outside_bound == r.degenerate_triples);
    } else {
      CHECK_FALSE(r.exhaustive);
      CHECK(r.triples == 300);
    }
  }
  const auto again = verify_legendre(125, 27, 300, 11, 3);
  for (std::size_t k = 0; k < rows.size(); ++k) CHECK(again[k].degenerate_triples == rows[k].degenerate_triples);
}

#include "rankforge/legendre.hpp"

#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/parallel.hpp"
#include "rankforge/primes.hpp"

#include <algorithm>
#include <random>

namespace rankforge {

namespace {

void check_shared_field(const QuadSumInput& in) {
  const auto* f = in.a.field_data();
  for (const FqElem* e : {&in.b, &in.c}) {
    const auto* g = e->field_data();
    if (f != g && (!f || !g || f->p != g->p || f->modulus != g->modulus))
      throw Error(ErrorCode::FieldMismatch, "a, b, c must lie in one field");
  }
}

FqElem element_at(const FqElem& proto, std::uint64_t index) {
  std::array<std::uint64_t, kMaxExtensionDegree> buf{};
  const auto p = proto.characteristic();
  const auto r = static_cast<std::size_t>(proto.degree());
  for (std::size_t i = 0; i < r; ++i) {
    buf[i] = index % p;
    index /= p;
  }
  return proto.sibling(std::span<const std::uint64_t>(buf.data(), r));
}

std::int64_t brute_i64(const FqElem& a, const FqElem& b, const FqElem& c) {
  const auto* f = a.field_data();
  const std::uint64_t q = f->q_small ? f->q_small : to_u64(f->q);
  std::int64_t sum = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FqElem t = element_at(a, i);
    sum += quadratic_character((a * t + b) * t + c);
  }
  return sum;
}

}  // namespace

namespace detail {

std::int64_t quad_sum_closed_i64(const FqElem& a, const FqElem& b, const FqElem& c) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "closed form needs a != 0");
  const int chi_a = quadratic_character(a);
  const FqElem disc = b * b - (a * c).scaled(4);
  if (disc.is_zero()) {
    const auto* f = a.field_data();
    const auto q = static_cast<std::int64_t>(f->q_small ? f->q_small : to_u64(f->q));
    return (q - 1) * chi_a;
  }
  return -chi_a;
}

}  // namespace detail

Integer quad_sum_closed(const QuadSumInput& in) {
  check_shared_field(in);
  if (in.a.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "closed form needs a != 0");
  const int chi_a = quadratic_character(in.a);
  const FqElem disc = in.b * in.b - (in.a * in.c).scaled(4);
  if (disc.is_zero()) return Integer(in.a.field_data()->q - 1) * chi_a;
  return Integer(-chi_a);
}

Integer quad_sum_brute(const QuadSumInput& in) {
  check_shared_field(in);
  return Integer(static_cast<long>(brute_i64(in.a, in.b, in.c)));
}

Integer conic_count(const QuadSumInput& in) {
  check_shared_field(in);
  const std::uint64_t q = to_u64(in.a.field_data()->q);
  std::vector<std::uint32_t> roots(q, 0);  // roots[i] = #{s : s^2 has index i}
  for (std::uint64_t i = 0; i < q; ++i) {
    const FqElem s = element_at(in.a, i);
    ++roots[(s * s).index()];
  }
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FqElem t = element_at(in.a, i);
    count += roots[((in.a * t + in.b) * t + in.c).index()];
  }
  return to_integer(count);
}

std::vector<PrimePower> odd_prime_powers(std::uint64_t max_q) {
  std::vector<PrimePower> out;
  for (auto p : primes_up_to(max_q)) {
    if (p == 2) continue;
    std::uint64_t q = p;
    for (int r = 1;; ++r) {
      out.push_back({q, p, r});
      if (q > max_q / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });
  return out;
}

std::vector<LegendreVerifyRow> verify_legendre(std::uint64_t max_q, std::uint64_t exhaustive_max_q,
                                               std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto powers = odd_prime_powers(max_q);
  std::vector<LegendreVerifyRow> rows(powers.size());
  parallel_for(powers.size(), threads, [&](std::size_t k) {
    const auto& pp = powers[k];
    auto modulus = find_irreducible(pp.p, pp.r);
    const FqField field = FqField::make(pp.p, modulus);
    LegendreVerifyRow& row = rows[k];
    row.q = pp.q;
    row.p = pp.p;
    row.r = pp.r;
    for (std::size_t i = 0; i < modulus.size(); ++i) row.modulus += (i ? "," : "") + std::to_string(modulus[i]);
    row.exhaustive = pp.q <= exhaustive_max_q;
    const auto q = static_cast<std::int64_t>(pp.q);
    auto check = [&](const FqElem& a, const FqElem& b, const FqElem& c) {
      ++row.triples;
      const QuadSumInput in{a, b, c};
      const Integer closed = quad_sum_closed(in);
      const Integer brute = quad_sum_brute(in);
      const Integer conic = conic_count(in);
      if (closed != brute) ++row.mismatches;
      if (conic != q + brute) ++row.conic_identity_failures;
      const bool outside = conic < q - 1 || conic > q + 1;
      if ((b * b - (a * c).scaled(4)).is_zero()) {
        ++row.degenerate_triples;
        if (outside) ++row.degenerate_outside_bound;
      } else if (outside) {
        ++row.bound_violations;
      }
    };
    if (row.exhaustive) {
      for (std::uint64_t ia = 1; ia < pp.q; ++ia)
        for (std::uint64_t ib = 0; ib < pp.q; ++ib)
          for (std::uint64_t ic = 0; ic < pp.q; ++ic)
            check(field.from_index(ia), field.from_index(ib), field.from_index(ic));
    } else {
      std::mt19937_64 rng(seed ^ (pp.q * 0x9E3779B97F4A7C15ULL));
      std::uniform_int_distribution<std::uint64_t> nonzero(1, pp.q - 1), any(0, pp.q - 1);
      for (std::uint64_t s = 0; s < samples; ++s) {
        const FqElem a = field.from_index(nonzero(rng));
        const FqElem b = field.from_index(any(rng));
        const FqElem c = field.from_index(any(rng));
        check(a, b, c);
      }
    }
  });
  return rows;
}

}  // namespace rankforge

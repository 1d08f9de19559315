#pragma once

// Shared helpers for the unit suites. Oracles here avoid the library's own
// algorithms: they work on raw residues with naive loops.

#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/finite_field.hpp"
#include "rankforge/legendre.hpp"

#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#define CHECK_CODE(expr, expected_code)                           \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const ::rankforge::Error& e_) {                      \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());     \
    }                                                             \
    CHECK_MESSAGE(thrown_, "expected an exception: " #expr);      \
  } while (0)

namespace testing_support {

using namespace rankforge;

/// One field per odd prime power up to max_q, built from the first
/// irreducible modulus.
inline std::vector<FqField> fields_up_to(std::uint64_t max_q) {
  std::vector<FqField> out;
  for (const auto& pp : odd_prime_powers(max_q)) out.push_back(FqField::make(pp.p, find_irreducible(pp.p, pp.r)));
  return out;
}

/// Nonzero squares of F_q by squaring every element.
inline std::set<std::uint64_t> square_indices(const FqField& F) {
  std::set<std::uint64_t> s;
  for (const auto& u : enumerate_elements(F))
    if (!u.is_zero()) s.insert((u * u).index());
  return s;
}

/// Legendre symbol from the table of squares.
inline int chi_oracle(const std::set<std::uint64_t>& squares, const FqElem& u) {
  if (u.is_zero()) return 0;
  return squares.count(u.index()) ? 1 : -1;
}

}  // namespace testing_support

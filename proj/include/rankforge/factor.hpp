#pragma once

// Factorization over finite fields: squarefree decomposition, distinct-degree
// splitting, then equal-degree splitting with a seeded generator.

#include "rankforge/finite_field.hpp"
#include "rankforge/poly.hpp"

#include <cstdint>
#include <vector>

namespace rankforge {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedf00dULL;

struct PolyFactor {
  FqPoly poly;  // monic irreducible
  int multiplicity = 0;
};

struct RootMultiplicity {
  FqElem value;
  int multiplicity = 0;
};

/// Factors a nonzero polynomial over the field of its coefficients. The unit
/// part is dropped; factors are sorted by (degree, coefficient indices).
std::vector<PolyFactor> factor_poly(const FqPoly& f, std::uint64_t seed = kDefaultSeed);

/// Factors of a reduction mod p together with the prime field their
/// coefficients live in (elements reference the field, so they travel together).
struct ModPFactorization {
  FqField field;
  std::vector<PolyFactor> factors;
};

/// Factors a monic integer polynomial modulo an odd prime p, over the prime
/// field with modulus x.
ModPFactorization factor_mod_p(const IntegerPoly& m, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

/// Roots in F_q with multiplicities, ordered by element index. Uses
/// gcd(f, x^q - x) and equal-degree splitting (plain root search when q < 50).
std::vector<RootMultiplicity> roots_in_fq(const FqPoly& f, const FqField& field,
                                          std::uint64_t seed = kDefaultSeed);

/// Rabin's test over the coefficient field.
bool is_irreducible(const FqPoly& f);

/// Lexicographically first monic irreducible polynomial of the given degree
/// over F_p (constant coefficient varying fastest), constant first.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int degree);

FqPoly reduce_poly(const IntegerPoly& m, const FqField& field);

/// Coefficients of a prime-field polynomial as residues, constant first.
std::vector<std::uint64_t> residues(const FqPoly& f);

}  // namespace rankforge

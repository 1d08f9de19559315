#pragma once

// The family  y^2 = f(x, T) = x^3 T^2 + 2 g(x) T - h(x)  with
//   g(x) = x^3 + a x^2 + b x + c,  h(x) = (A - 1) x^3 + B x^2 + C x + D,
// built so that D_T(x) = g(x)^2 + x^3 h(x) = A * prod (x - rho_i^2), A = alpha^2.

#include "rankforge/number_field.hpp"

#include <string>
#include <vector>

namespace rankforge {

struct FamilySpec {
  NumberField field;
  std::vector<KElem> rho;  // six square roots of the roots of D_T
  KElem alpha;             // A = alpha^2
};

struct CurveFamily {
  FamilySpec spec;
  std::vector<KElem> roots;  // r_i = rho_i^2
  KElem a, b, c, A, B, C, D;
  KPoly g, h, D_T;
  /// Rational integer divisible by the residue characteristic of every bad
  /// prime: 2, numerators of the norms of alpha, rho_i, r_i - r_j, and all
  /// coefficient denominators of the family data.
  Integer bad_divisor;
};

/// Solves g^2 + x^3 h = A prod (x - r_i) coefficient by coefficient
/// (c = alpha prod rho_i) and re-verifies the identity by expansion.
CurveFamily construct_family(const FamilySpec& spec);

enum class PrimeStatus {
  Good,
  EvenCharacteristic,
  DenominatorNotInvertible,
  ZeroData,       // alpha * prod rho_i vanishes in the residue field
  RepeatedRoots,  // r_i = r_j in the residue field
};

struct PrimeCheck {
  PrimeStatus status = PrimeStatus::Good;
  std::string reason;  // empty when good
  bool good() const { return status == PrimeStatus::Good; }
};

/// Good iff the residue field is odd, every piece of family data reduces, and
/// 2 alpha prod rho_i prod_{i<j} (r_i - r_j) is nonzero in the residue field.
PrimeCheck is_good_prime(const CurveFamily& fam, const PrimeIdeal& prime);

/// Family data reduced into one residue field, for inner loops.
struct ReducedFamily {
  PrimeIdeal prime;
  std::vector<FqElem> g;    // 4 coefficients, constant first
  std::vector<FqElem> h;    // 4 coefficients
  std::vector<FqElem> D_T;  // 7 coefficients
  std::vector<FqElem> roots;
};

/// Throws DenominatorNotInvertible if some coefficient does not reduce.
ReducedFamily reduce_family(const CurveFamily& fam, const PrimeIdeal& prime);

/// f(x, t) = t^2 x^3 + 2 t g(x) - h(x) over the residue field, as a cubic in x.
FqPoly fiber_polynomial(const ReducedFamily& red, const FqElem& t);
FqPoly fiber_polynomial(const CurveFamily& fam, const PrimeIdeal& prime, const FqElem& t);

}  // namespace rankforge

#include "rankforge/family.hpp"

#include "rankforge/error.hpp"

namespace rankforge {

namespace {

// Elementary symmetric functions e_0..e_n of the given values.
std::vector<KElem> elementary_symmetric(const std::vector<KElem>& values, const NumberField& field) {
  std::vector<KElem> e(values.size() + 1, field.zero());
  e[0] = field.one();
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e;
}

void absorb_denominator(Integer& acc, const KElem& x) { acc *= x.denominator(); }

void absorb_norm(Integer& acc, const KElem& x) {
  const Rational n = x.norm();
  acc *= abs(n.get_num());
  acc *= x.denominator();
}

}  // namespace

CurveFamily construct_family(const FamilySpec& spec) {
  const NumberField& K = spec.field;
  if (spec.rho.size() != 6) throw Error(ErrorCode::InvalidArgument, "a family needs exactly six rho values");
  for (const auto& r : spec.rho)
    if (!(r.field() == K)) throw Error(ErrorCode::DomainMismatch, "rho value outside the family's field");
  if (!(spec.alpha.field() == K)) throw Error(ErrorCode::DomainMismatch, "alpha outside the family's field");
  if (spec.alpha.is_zero()) throw Error(ErrorCode::ZeroAlpha, "alpha must be nonzero");
  for (std::size_t i = 0; i < 6; ++i)
    if (spec.rho[i].is_zero()) throw Error(ErrorCode::ZeroRoot, "rho_" + std::to_string(i + 1) + " is zero");

  CurveFamily fam;
  fam.spec = spec;
  for (const auto& r : spec.rho) fam.roots.push_back(r * r);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (fam.roots[i] == fam.roots[j])
        throw Error(ErrorCode::RepeatedRoot, "rho_" + std::to_string(i + 1) + "^2 = rho_" + std::to_string(j + 1) + "^2");

  const auto e = elementary_symmetric(fam.roots, K);
  KElem rho_product = K.one();
  for (const auto& r : spec.rho) rho_product *= r;
  const KElem two = K.from_rational(Rational(2));
  fam.A = spec.alpha * spec.alpha;
  fam.c = spec.alpha * rho_product;
  fam.b = -(fam.A * e[5]) / (two * fam.c);
  fam.a = (fam.A * e[4] - fam.b * fam.b) / (two * fam.c);
  fam.B = -(fam.A * e[1]) - two * fam.a;
  fam.C = fam.A * e[2] - two * fam.b - fam.a * fam.a;
  fam.D = -(fam.A * e[3]) - two * fam.c - two * fam.a * fam.b;

  const KElem one = K.one();
  fam.g = KPoly({fam.c, fam.b, fam.a, one});
  fam.h = KPoly({fam.D, fam.C, fam.B, fam.A - one});
  const KPoly x3 = KPoly::monomial(one, 3);
  fam.D_T = fam.g * fam.g + x3 * fam.h;
  const KPoly target = expand_from_roots<KElem>(fam.roots, fam.A);
  if (!(fam.D_T == target))
    throw Error(ErrorCode::InternalIdentityFailure, "g^2 + x^3 h does not expand to A prod (x - rho_i^2)");

  Integer bad = 2;
  absorb_norm(bad, spec.alpha);
  for (const auto& r : spec.rho) absorb_norm(bad, r);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) absorb_norm(bad, fam.roots[i] - fam.roots[j]);
  for (const KElem* x : {&fam.a, &fam.b, &fam.c, &fam.A, &fam.B, &fam.C, &fam.D}) absorb_denominator(bad, *x);
  fam.bad_divisor = bad;
  return fam;
}

ReducedFamily reduce_family(const CurveFamily& fam, const PrimeIdeal& prime) {
  ReducedFamily red;
  red.prime = prime;
  const FqElem zero = prime.residue_field.zero();
  auto coeffs = [&](const KPoly& f, std::size_t n) {
    std::vector<FqElem> out(n, zero);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = reduce(f.coeffs()[i], prime);
    return out;
  };
  red.g = coeffs(fam.g, 4);
  red.h = coeffs(fam.h, 4);
  red.D_T = coeffs(fam.D_T, 7);
  for (const auto& r : fam.roots) red.roots.push_back(reduce(r, prime));
  return red;
}

PrimeCheck is_good_prime(const CurveFamily& fam, const PrimeIdeal& prime) {
  if (prime.p == 2) return {PrimeStatus::EvenCharacteristic, "bad prime: even characteristic"};
  const std::string where = fam.spec.field.degree() == 1 ? std::to_string(prime.p)
                                                         : "(" + std::to_string(prime.p) + ", " + prime.factor_text() + ")";
  std::vector<FqElem> rho;
  FqElem alpha;
  try {
    for (const auto& r : fam.spec.rho) rho.push_back(reduce(r, prime));
    alpha = reduce(fam.spec.alpha, prime);
    reduce_family(fam, prime);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DenominatorNotInvertible) throw;
    return {PrimeStatus::DenominatorNotInvertible, "bad prime: family data has a denominator divisible by " + std::to_string(prime.p)};
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (rho[i] * rho[i] == rho[j] * rho[j]) return {PrimeStatus::RepeatedRoots, "bad prime: repeated roots mod " + where};
  FqElem product = alpha;
  for (const auto& r : rho) product *= r;
  if (product.is_zero()) return {PrimeStatus::ZeroData, "bad prime: alpha or some rho vanishes mod " + where};
  return {};
}

FqPoly fiber_polynomial(const ReducedFamily& red, const FqElem& t) {
  const FqElem two_t = t.scaled(2);
  std::vector<FqElem> out;
  for (std::size_t k = 0; k < 4; ++k) out.push_back(two_t * red.g[k] - red.h[k]);
  out[3] += t * t;
  return FqPoly(std::move(out));
}

FqPoly fiber_polynomial(const CurveFamily& fam, const PrimeIdeal& prime, const FqElem& t) {
  return fiber_polynomial(reduce_family(fam, prime), t);
}

}  // namespace rankforge

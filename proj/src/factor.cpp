#include "rankforge/factor.hpp"

#include "rankforge/error.hpp"

#include <algorithm>
#include <random>

namespace rankforge {

namespace {

using Traits = CoeffTraits<FqElem>;

FqPoly x_poly(const FqElem& proto) { return FqPoly::monomial(Traits::one_like(proto), 1); }

FqElem pth_root(const FqElem& a) {
  // a^(1/p) = a^(p^(r-1)) in F_{p^r}
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), a.characteristic(), static_cast<unsigned long>(a.degree() - 1));
  return a.pow(e);
}

FqPoly pth_root_poly(const FqPoly& f) {
  const auto p = f.leading().characteristic();
  std::vector<FqElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(pth_root(f.coeffs()[i]));
  return FqPoly(std::move(out));
}

FqPoly exact_div(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

void squarefree_parts(const FqPoly& f, int scale, std::vector<PolyFactor>& out) {
  if (f.degree() <= 0) return;
  const auto p = static_cast<int>(std::min<std::uint64_t>(f.leading().characteristic(), 1u << 30));
  FqPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root_poly(f), scale * p, out);
    return;
  }
  FqPoly c = gcd(f, d);
  FqPoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root_poly(c), scale * p, out);
}

struct DegreePart {
  FqPoly poly;
  int degree;
};

std::vector<DegreePart> distinct_degree(FqPoly f) {
  std::vector<DegreePart> out;
  const FqElem& proto = f.leading();
  const Integer& q = proto.field_data()->q;
  const FqPoly x = x_poly(proto);
  FqPoly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, q, f);
    FqPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = exact_div(f, g);
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

FqPoly random_poly(const FqElem& proto, int below_degree, std::mt19937_64& rng) {
  const auto p = proto.characteristic();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<FqElem> coeffs;
  std::vector<std::uint64_t> buf(static_cast<std::size_t>(proto.degree()));
  for (int i = 0; i < below_degree; ++i) {
    for (auto& b : buf) b = dist(rng);
    coeffs.push_back(proto.sibling(buf));
  }
  return FqPoly(std::move(coeffs));
}

void equal_degree(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FqElem& proto = g.leading();
  const Integer& q = proto.field_data()->q;
  if (d == 1 && q < 50) {
    const auto n = to_u64(q);
    std::uint64_t idx = 0;
    std::vector<std::uint64_t> buf(static_cast<std::size_t>(proto.degree()));
    for (std::uint64_t i = 0; i < n; ++i) {
      idx = i;
      for (auto& b : buf) {
        b = idx % proto.characteristic();
        idx /= proto.characteristic();
      }
      FqElem u = proto.sibling(buf);
      if (g.eval(u).is_zero()) out.push_back(FqPoly::linear_root(u));
    }
    return;
  }
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  const FqPoly one = FqPoly::constant(Traits::one_like(proto));
  for (;;) {
    FqPoly a = random_poly(proto, g.degree(), rng);
    if (a.degree() <= 0) continue;
    FqPoly u = gcd(g, powmod(a, e, g) - one);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(exact_div(g, u), d, rng, out);
      return;
    }
  }
}

std::vector<std::uint64_t> sort_key(const FqPoly& f) {
  std::vector<std::uint64_t> key;
  key.push_back(static_cast<std::uint64_t>(f.degree()));
  for (const auto& c : f.coeffs()) key.push_back(c.index());
  return key;
}

}  // namespace

std::vector<PolyFactor> factor_poly(const FqPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<PolyFactor> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::mt19937_64 rng(seed);
  std::vector<PolyFactor> out;
  for (const auto& part : parts) {
    for (const auto& dd : distinct_degree(part.poly)) {
      std::vector<FqPoly> irreducibles;
      equal_degree(dd.poly, dd.degree, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return sort_key(a.poly) < sort_key(b.poly); });
  return out;
}

FqPoly reduce_poly(const IntegerPoly& m, const FqField& field) {
  std::vector<FqElem> coeffs;
  coeffs.reserve(m.coeffs().size());
  for (const auto& c : m.coeffs()) coeffs.push_back(field.from_integer(c));
  return FqPoly(std::move(coeffs));
}

ModPFactorization factor_mod_p(const IntegerPoly& m, std::uint64_t p, std::uint64_t seed) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "factor_mod_p: p = 2 is not supported");
  if (m.degree() < 1 || !m.is_monic())
    throw Error(ErrorCode::InvalidArgument, "factor_mod_p: polynomial must be monic of degree >= 1");
  ModPFactorization out{FqField::prime_field(p), {}};
  out.factors = factor_poly(reduce_poly(m, out.field), seed);
  return out;
}

std::vector<RootMultiplicity> roots_in_fq(const FqPoly& f, const FqField& field, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FqElem zero = field.zero();
  if (!Traits::same_domain(f.leading(), zero))
    throw Error(ErrorCode::DomainMismatch, "polynomial is not over the requested field");
  std::vector<RootMultiplicity> out;
  if (f.degree() == 0) return out;
  const FqPoly fm = f.monic();
  const FqPoly x = x_poly(zero);
  FqPoly split = gcd(fm, powmod(x, field.order(), fm) - x);
  if (split.degree() <= 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<FqPoly> linear;
  equal_degree(split, 1, rng, linear);
  for (const auto& lin : linear) {
    FqElem root = -lin[0];
    int mult = 0;
    FqPoly rest = fm;
    for (;;) {
      auto [quot, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(quot);
    }
    out.push_back({root, mult});
  }
  std::sort(out.begin(), out.end(), [](const RootMultiplicity& a, const RootMultiplicity& b) {
    return a.value.index() < b.value.index();
  });
  return out;
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FqPoly fm = f.monic();
  const Integer& q = fm.leading().field_data()->q;
  const FqPoly x = x_poly(fm.leading()) % fm;
  std::vector<FqPoly> frob(static_cast<std::size_t>(n + 1));
  frob[0] = x;
  for (int k = 1; k <= n; ++k) frob[static_cast<std::size_t>(k)] = powmod(frob[static_cast<std::size_t>(k - 1)], q, fm);
  if (!(frob[static_cast<std::size_t>(n)] == x)) return false;
  int rem = n;
  for (int l = 2; l <= rem; ++l) {
    if (rem % l) continue;
    while (rem % l == 0) rem /= l;
    if (gcd(fm, frob[static_cast<std::size_t>(n / l)] - x).degree() > 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  if (degree == 1) return {0, 1};
  FqField base = FqField::prime_field(p);
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, static_cast<unsigned long>(degree));
  const auto n = to_u64(count);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::vector<std::uint64_t> coeffs;
    std::uint64_t v = idx;
    for (int i = 0; i < degree; ++i) {
      coeffs.push_back(v % p);
      v /= p;
    }
    coeffs.push_back(1);
    std::vector<FqElem> elems;
    for (auto c : coeffs) elems.push_back(base.from_int(static_cast<std::int64_t>(c)));
    if (is_irreducible(FqPoly(std::move(elems)))) return coeffs;
  }
  throw Error(ErrorCode::InternalIdentityFailure, "no irreducible polynomial found");
}

std::vector<std::uint64_t> residues(const FqPoly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) {
    if (c.degree() != 1) throw Error(ErrorCode::DomainMismatch, "expected prime-field coefficients");
    out.push_back(c.coeffs()[0]);
  }
  return out;
}

}  // namespace rankforge

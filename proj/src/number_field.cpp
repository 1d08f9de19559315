#include "rankforge/number_field.hpp"

#include "rankforge/error.hpp"
#include "rankforge/parallel.hpp"
#include "rankforge/primes.hpp"

#include <algorithm>
#include <cmath>

namespace rankforge {

namespace {

RationalPoly to_rational(const IntegerPoly& m) {
  std::vector<Rational> c;
  for (const auto& v : m.coeffs()) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

std::vector<Rational> reduce_to_basis(const RationalPoly& a, const RationalPoly& m) {
  const RationalPoly r = a % m;
  std::vector<Rational> out(static_cast<std::size_t>(m.degree()), Rational(0));
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

// Determinant of multiplication by a(x) on Q[x]/(m), i.e. Res(m, a) for monic m.
Rational multiplication_determinant(const RationalPoly& a, const RationalPoly& m) {
  const int n = m.degree();
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  RationalPoly col = a % m;
  const RationalPoly x = RationalPoly::monomial(Rational(1), 1);
  for (int j = 0; j < n; ++j) {
    auto v = reduce_to_basis(col, m);
    for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
    col = (col * x) % m;
  }
  return determinant(std::move(mat));
}

Integer discriminant_of(const IntegerPoly& m) {
  const int n = m.degree();
  const RationalPoly mq = to_rational(m);
  Rational res = multiplication_determinant(mq.derivative(), mq);
  if (((n * (n - 1)) / 2) % 2) res = -res;
  return res.get_num();
}

// Every degree d in (0, n) that some product of the factors mod p can have.
std::vector<bool> achievable_degrees(const std::vector<PolyFactor>& factors, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n + 1), false);
  reach[0] = true;
  for (const auto& f : factors) {
    for (int k = 0; k < f.multiplicity; ++k) {
      for (int d = n; d >= f.poly.degree(); --d)
        if (reach[static_cast<std::size_t>(d - f.poly.degree())]) reach[static_cast<std::size_t>(d)] = true;
    }
  }
  return reach;
}

bool certified_by_factor_degrees(const IntegerPoly& m, const Integer& disc) {
  const int n = m.degree();
  std::vector<bool> possible(static_cast<std::size_t>(n + 1), true);
  int used = 0;
  for (std::uint64_t p : primes_up_to(2000)) {
    if (p == 2 || disc % to_integer(p) == 0) continue;
    auto reach = achievable_degrees(factor_mod_p(m, p).factors, n);
    bool any = false;
    for (int d = 1; d < n; ++d) {
      possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && reach[static_cast<std::size_t>(d)];
      any = any || possible[static_cast<std::size_t>(d)];
    }
    if (!any) return true;
    if (++used >= 40) break;
  }
  return false;
}

Integer eval_integer(const IntegerPoly& m, const Integer& x) {
  Integer acc = 0;
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact search for an integer root of a monic cubic, splitting [-B, B] at the
// critical points into monotone pieces and bisecting each piece.
bool cubic_has_integer_root(const IntegerPoly& m) {
  Integer bound = 0;
  for (const auto& c : m.coeffs()) bound = std::max(bound, Integer(abs(c)));
  bound += 1;
  std::vector<Integer> probes;
  const double b = m[2].get_d(), c = m[1].get_d();
  const double disc = 4 * b * b - 12 * c;
  std::vector<Integer> cuts;
  cuts.push_back(-bound);
  if (disc >= 0) {
    const double s = std::sqrt(disc);
    for (double crit : {(-2 * b - s) / 6.0, (-2 * b + s) / 6.0}) {
      Integer center(std::floor(crit));
      for (int k = -2; k <= 3; ++k) probes.push_back(center + k);
      cuts.push_back(center - 3);
      cuts.push_back(center + 4);
    }
  }
  cuts.push_back(bound);
  for (const auto& r : probes)
    if (eval_integer(m, r) == 0) return true;
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Integer lo = cuts[i], hi = cuts[i + 1];
    if (lo > hi) continue;
    int slo = sgn(eval_integer(m, lo)), shi = sgn(eval_integer(m, hi));
    if (slo == 0 || shi == 0) return true;
    if (slo == shi) continue;
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      int sm = sgn(eval_integer(m, mid));
      if (sm == 0) return true;
      if (sm == slo) lo = mid; else hi = mid;
    }
  }
  return false;
}

PrimeIdeal make_ideal(std::uint64_t p, const FqField& prime_field, FqPoly factor, int multiplicity) {
  PrimeIdeal ideal;
  ideal.p = p;
  ideal.prime_field = prime_field;
  ideal.f = factor.degree();
  ideal.e = multiplicity;
  Integer norm;
  mpz_ui_pow_ui(norm.get_mpz_t(), p, static_cast<unsigned long>(ideal.f));
  ideal.norm = mpz_sizeinbase(norm.get_mpz_t(), 2) <= 63 ? to_u64(norm) : UINT64_MAX;
  ideal.residue_field = FqField::make_unchecked(p, residues(factor));
  ideal.theta_image = ideal.residue_field.generator();
  ideal.factor = std::move(factor);
  return ideal;
}

std::vector<PrimeIdeal> ideals_above(const NumberField& field, std::uint64_t p, std::uint64_t max_norm) {
  std::vector<PrimeIdeal> out;
  if (field.is_excluded(p)) return out;
  const bool only_linear = max_norm / p < p;  // p^2 > max_norm
  if (only_linear || field.degree() == 1) {
    FqField fp = FqField::prime_field(p);
    FqPoly m = reduce_poly(field.min_poly(), fp);
    for (const auto& root : roots_in_fq(m, fp)) out.push_back(make_ideal(p, fp, FqPoly::linear_root(root.value), root.multiplicity));
    // same order factor_poly produces: by constant coefficient of x - r
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
      return a.factor[0].index() < b.factor[0].index();
    });
    return out;
  }
  auto fac = factor_mod_p(field.min_poly(), p);
  for (auto& f : fac.factors) {
    Integer norm;
    mpz_ui_pow_ui(norm.get_mpz_t(), p, static_cast<unsigned long>(f.poly.degree()));
    if (norm > to_integer(max_norm)) continue;
    out.push_back(make_ideal(p, fac.field, std::move(f.poly), f.multiplicity));
  }
  return out;
}

}  // namespace

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

NumberField NumberField::make(IntegerPoly min_poly, std::optional<std::vector<std::uint64_t>> excluded_primes,
                              bool assert_irreducible) {
  if (min_poly.degree() < 1 || !min_poly.is_monic())
    throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic of degree >= 1");
  if (min_poly.degree() > kMaxExtensionDegree)
    throw Error(ErrorCode::UnsupportedDegree, "field degree above " + std::to_string(kMaxExtensionDegree));
  auto d = std::make_shared<detail::NumberFieldData>();
  d->degree = min_poly.degree();
  d->discriminant = discriminant_of(min_poly);
  if (d->discriminant == 0)
    throw Error(ErrorCode::NotIrreducible, "defining polynomial has a repeated factor (zero discriminant)");
  d->twice_disc_abs = 2 * abs(d->discriminant);
  const int n = d->degree;
  if (n == 2) {
    if (mpz_perfect_square_p(d->discriminant.get_mpz_t()))
      throw Error(ErrorCode::NotIrreducible, "quadratic " + format_integer_poly(min_poly) + " has rational roots");
  } else if (n == 3) {
    if (cubic_has_integer_root(min_poly))
      throw Error(ErrorCode::NotIrreducible, "cubic " + format_integer_poly(min_poly) + " has a rational root");
  } else if (n >= 4 && !assert_irreducible && !certified_by_factor_degrees(min_poly, d->discriminant)) {
    throw Error(ErrorCode::NotIrreducible,
                "could not certify irreducibility of " + format_integer_poly(min_poly) + "; set assert_irreducible");
  }
  d->asserted_irreducible = assert_irreducible;
  if (excluded_primes) {
    auto list = *excluded_primes;
    list.push_back(2);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    d->explicit_excluded = std::move(list);
  }
  d->min_poly_q = to_rational(min_poly);
  d->min_poly = std::move(min_poly);
  return NumberField(std::move(d));
}

NumberField NumberField::rationals() { return make(IntegerPoly({Integer(0), Integer(1)})); }

bool NumberField::is_excluded(std::uint64_t p) const {
  if (p == 2) return true;
  if (data_->explicit_excluded) return std::binary_search(data_->explicit_excluded->begin(), data_->explicit_excluded->end(), p);
  return mpz_divisible_ui_p(data_->twice_disc_abs.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

KElem NumberField::zero() const { return KElem(*this, std::vector<Rational>(static_cast<std::size_t>(degree()), Rational(0))); }

KElem NumberField::one() const { return from_rational(Rational(1)); }

KElem NumberField::theta() const {
  if (degree() == 1) return from_rational(Rational(-data_->min_poly[0]));
  auto z = zero();
  z.c_[1] = 1;
  return z;
}

KElem NumberField::from_rational(const Rational& value) const {
  auto z = zero();
  z.c_[0] = value;
  return z;
}

KElem NumberField::element(std::vector<Rational> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree()))
    throw Error(ErrorCode::InvalidArgument, "element has more coefficients than the field degree");
  coeffs.resize(static_cast<std::size_t>(degree()), Rational(0));
  for (auto& c : coeffs) c.canonicalize();
  return KElem(*this, std::move(coeffs));
}

KElem NumberField::parse_element(std::string_view text) const {
  const RationalPoly poly = parse_rational_poly(text);
  std::vector<Rational> coeffs = poly.coeffs();
  if (coeffs.size() > static_cast<std::size_t>(degree()))
    throw Error(ErrorCode::Parse, "element '" + std::string(text) + "' has more than " + std::to_string(degree()) + " coefficients");
  return element(std::move(coeffs));
}

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->min_poly == b.data_->min_poly;
}

void KElem::check_same_field(const KElem& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::DomainMismatch, "elements of different number fields");
}

bool KElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

KElem& KElem::operator+=(const KElem& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

KElem& KElem::operator-=(const KElem& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

KElem KElem::operator-() const {
  KElem out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

KElem& KElem::operator*=(const KElem& o) {
  check_same_field(o);
  const RationalPoly prod = RationalPoly(c_) * RationalPoly(o.c_);
  c_ = reduce_to_basis(prod, field_.min_poly_rational());
  return *this;
}

KElem KElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in a number field");
  // Extended Euclid on (a, m): s*a + t*m = 1, so s = a^-1 mod m.
  RationalPoly r0 = field_.min_poly_rational(), r1(c_);
  RationalPoly s0, s1 = RationalPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::NotIrreducible, "element is a zero divisor; defining polynomial is reducible");
  const Rational inv_lead = Rational(1) / r0[0];
  return KElem(field_, reduce_to_basis(s0.scaled(inv_lead), field_.min_poly_rational()));
}

KElem& KElem::operator/=(const KElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const KElem& a, const KElem& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

Rational KElem::norm() const { return multiplication_determinant(RationalPoly(c_), field_.min_poly_rational()); }

Integer KElem::denominator() const {
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string KElem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += format_rational(c_[i]);
  }
  return out;
}

std::vector<PrimeIdeal> primes_above(const NumberField& field, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
  return ideals_above(field, p, UINT64_MAX);
}

IdealEnumeration enumerate_prime_ideals(const NumberField& field, std::uint64_t max_norm, int threads) {
  IdealEnumeration out;
  if (max_norm < 2) return out;
  const auto primes = primes_up_to(max_norm);
  std::vector<std::vector<PrimeIdeal>> per_prime(primes.size());
  for (auto p : primes)
    if (field.is_excluded(p)) ++out.excluded_primes;
  parallel_for(primes.size(), threads, [&](std::size_t i) { per_prime[i] = ideals_above(field, primes[i], max_norm); });
  for (auto& v : per_prime)
    for (auto& ideal : v) out.ideals.push_back(std::move(ideal));
  std::stable_sort(out.ideals.begin(), out.ideals.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.p < b.p;
  });
  return out;
}

FqElem reduce(const KElem& x, const PrimeIdeal& prime) {
  const FqField& rf = prime.residue_field;
  FqElem acc = rf.zero();
  const auto& c = x.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= prime.theta_image;
    acc += rf.from_int(static_cast<std::int64_t>(reduce_mod(*it, prime.p)));
  }
  return acc;
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    comp_ += (sum_ - t) + v;
  else
    comp_ += (v - t) + sum_;
  sum_ = t;
}

LandauResult landau_sum(const NumberField& field, std::uint64_t max_norm, int threads) {
  LandauResult out;
  if (max_norm < 2) return out;
  const auto ideals = enumerate_prime_ideals(field, max_norm, threads);
  CompensatedSum acc;
  for (const auto& ideal : ideals.ideals) acc.add(std::log(static_cast<double>(ideal.norm)));
  out.sum = acc.value();
  out.ratio = out.sum / static_cast<double>(max_norm);
  out.count = ideals.ideals.size();
  out.excluded_primes = ideals.excluded_primes;
  return out;
}

}  // namespace rankforge

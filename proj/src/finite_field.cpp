#include "rankforge/finite_field.hpp"

#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/primes.hpp"

#include <algorithm>

namespace rankforge {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 62;

std::shared_ptr<detail::FieldData> build_data(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->r = static_cast<int>(modulus.size()) - 1;
  d->modulus = std::move(modulus);
  mpz_ui_pow_ui(d->q.get_mpz_t(), p, static_cast<unsigned long>(d->r));
  d->half_order = (d->q - 1) / 2;
  d->q_minus_2 = d->q - 2;
  if (mpz_sizeinbase(d->q.get_mpz_t(), 2) <= 63) {
    d->q_small = to_u64(d->q);
    d->half_order_small = (d->q_small - 1) / 2;
  }
  return d;
}

void validate_characteristic(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::CompositeCharacteristic, "characteristic 2 is not supported");
  if (p >= kMaxCharacteristic) throw Error(ErrorCode::InvalidArgument, "characteristic exceeds 2^62");
  if (!is_prime(p)) throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not an odd prime");
}

std::vector<std::uint64_t> normalize_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorCode::ReducibleModulus, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorCode::ReducibleModulus, "modulus must be monic");
  if (static_cast<int>(modulus.size()) - 1 > kMaxExtensionDegree)
    throw Error(ErrorCode::UnsupportedDegree,
                "extension degree above " + std::to_string(kMaxExtensionDegree) + " is not supported");
  return modulus;
}

inline std::uint64_t add_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

}  // namespace

FqField FqField::make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  validate_characteristic(p);
  modulus = normalize_modulus(p, std::move(modulus));
  if (modulus.size() > 2) {
    FqField base = prime_field(p);
    std::vector<FqElem> coeffs;
    for (auto c : modulus) coeffs.push_back(base.from_int(static_cast<std::int64_t>(c)));
    if (!is_irreducible(FqPoly(std::move(coeffs))))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  }
  return FqField(build_data(p, std::move(modulus)));
}

FqField FqField::prime_field(std::uint64_t p) {
  validate_characteristic(p);
  return FqField(build_data(p, {0, 1}));
}

FqField FqField::make_unchecked(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  return FqField(build_data(p, normalize_modulus(p, std::move(modulus))));
}

std::uint64_t FqField::order_u64() const { return data_->q_small ? data_->q_small : to_u64(data_->q); }

FqElem FqField::zero() const { return FqElem(data_.get()); }

FqElem FqField::one() const {
  FqElem e(data_.get());
  e.c_[0] = 1;
  return e;
}

FqElem FqField::from_int(std::int64_t value) const {
  FqElem e(data_.get());
  const auto p = static_cast<std::int64_t>(std::min<std::uint64_t>(data_->p, INT64_MAX));
  std::int64_t r = value % p;
  if (r < 0) r += p;
  e.c_[0] = static_cast<std::uint64_t>(r);
  return e;
}

FqElem FqField::from_integer(const Integer& value) const {
  FqElem e(data_.get());
  e.c_[0] = reduce_mod(value, data_->p);
  return e;
}

FqElem FqField::from_poly(std::span<const std::uint64_t> coeffs) const {
  const auto p = data_->p;
  const int r = data_->r;
  std::vector<std::uint64_t> buf(coeffs.begin(), coeffs.end());
  for (auto& c : buf) c %= p;
  const auto& m = data_->modulus;
  for (int k = static_cast<int>(buf.size()) - 1; k >= r; --k) {
    const std::uint64_t t = buf[static_cast<std::size_t>(k)];
    if (t == 0) continue;
    for (int j = 0; j < r; ++j) {
      auto idx = static_cast<std::size_t>(k - r + j);
      buf[idx] = sub_p(buf[idx], mul_mod(t, m[static_cast<std::size_t>(j)], p), p);
    }
    buf[static_cast<std::size_t>(k)] = 0;
  }
  FqElem e(data_.get());
  for (int i = 0; i < r && i < static_cast<int>(buf.size()); ++i) e.c_[static_cast<std::size_t>(i)] = buf[static_cast<std::size_t>(i)];
  return e;
}

FqElem FqField::from_index(std::uint64_t index) const {
  FqElem e(data_.get());
  for (int i = 0; i < data_->r; ++i) {
    e.c_[static_cast<std::size_t>(i)] = index % data_->p;
    index /= data_->p;
  }
  return e;
}

FqElem FqField::generator() const {
  const std::uint64_t x[2] = {0, 1};
  return from_poly(x);
}

bool operator==(const FqField& a, const FqField& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

void FqElem::check_same_field(const FqElem& o) const {
  if (field_ == o.field_ && field_) return;
  if (field_ && o.field_ && field_->p == o.field_->p && field_->modulus == o.field_->modulus) return;
  throw Error(ErrorCode::FieldMismatch, "elements belong to different fields");
}

bool FqElem::is_zero() const {
  for (int i = 0; i < field_->r; ++i)
    if (c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool FqElem::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < field_->r; ++i)
    if (c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::uint64_t FqElem::index() const {
  std::uint64_t idx = 0;
  for (int i = field_->r - 1; i >= 0; --i) idx = idx * field_->p + c_[static_cast<std::size_t>(i)];
  return idx;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  check_same_field(o);
  for (int i = 0; i < field_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = add_p(c_[k], o.c_[k], field_->p);
  }
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  check_same_field(o);
  for (int i = 0; i < field_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = sub_p(c_[k], o.c_[k], field_->p);
  }
  return *this;
}

FqElem FqElem::operator-() const {
  FqElem out(field_);
  for (int i = 0; i < field_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    out.c_[k] = c_[k] ? field_->p - c_[k] : 0;
  }
  return out;
}

FqElem& FqElem::operator*=(const FqElem& o) {
  check_same_field(o);
  const auto p = field_->p;
  const int r = field_->r;
  if (r == 1) {
    c_[0] = mul_mod(c_[0], o.c_[0], p);
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (int i = 0; i < r; ++i) {
    const auto a = c_[static_cast<std::size_t>(i)];
    if (!a) continue;
    for (int j = 0; j < r; ++j) {
      auto k = static_cast<std::size_t>(i + j);
      prod[k] = add_p(prod[k], mul_mod(a, o.c_[static_cast<std::size_t>(j)], p), p);
    }
  }
  const auto& m = field_->modulus;
  for (int k = 2 * r - 2; k >= r; --k) {
    const auto t = prod[static_cast<std::size_t>(k)];
    if (!t) continue;
    for (int j = 0; j < r; ++j) {
      auto idx = static_cast<std::size_t>(k - r + j);
      prod[idx] = sub_p(prod[idx], mul_mod(t, m[static_cast<std::size_t>(j)], p), p);
    }
  }
  for (int i = 0; i < r; ++i) c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const FqElem& a, const FqElem& b) {
  if (a.field_ != b.field_ &&
      (!a.field_ || !b.field_ || a.field_->p != b.field_->p || a.field_->modulus != b.field_->modulus))
    return false;
  for (int i = 0; i < a.field_->r; ++i)
    if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

FqElem FqElem::pow(const Integer& exponent) const {
  if (sgn(exponent) < 0) return inverse().pow(Integer(-exponent));
  FqElem result(field_);
  result.c_[0] = 1;
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (sgn(exponent) == 0) return result;
  for (auto i = static_cast<long>(bits) - 1; i >= 0; --i) {
    result *= result;
    if (mpz_tstbit(exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result *= *this;
  }
  return result;
}

FqElem FqElem::pow(std::uint64_t exponent) const {
  FqElem result(field_);
  result.c_[0] = 1;
  FqElem base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  if (field_->r == 1) {
    FqElem out(field_);
    out.c_[0] = inv_mod(c_[0], field_->p);
    return out;
  }
  return pow(field_->q_minus_2);
}

FqElem FqElem::scaled(std::int64_t k) const {
  const auto p = static_cast<std::int64_t>(field_->p);
  std::int64_t kr = k % p;
  if (kr < 0) kr += p;
  FqElem out(field_);
  for (int i = 0; i < field_->r; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.c_[idx] = mul_mod(c_[idx], static_cast<std::uint64_t>(kr), field_->p);
  }
  return out;
}

FqElem FqElem::sibling(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(field_->r))
    throw Error(ErrorCode::InvalidArgument, "too many coefficients for F_q element");
  FqElem out(field_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.c_[i] = coeffs[i] % field_->p;
  return out;
}

int quadratic_character(const FqElem& u) {
  if (u.is_zero()) return 0;
  const auto* f = u.field_data();
  const FqElem v = f->half_order_small ? u.pow(f->half_order_small) : u.pow(f->half_order);
  if (v.is_one()) return 1;
  if ((v + u.pow(std::uint64_t{0})).is_zero()) return -1;
  throw Error(ErrorCode::InternalIdentityFailure, "Euler criterion produced neither 1 nor -1; modulus is not irreducible");
}

std::vector<FqElem> enumerate_elements(const FqField& field) {
  const std::uint64_t q = field.order_u64();
  std::vector<FqElem> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(field.from_index(i));
  return out;
}

std::string format_element(const FqElem& u) {
  std::string out;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(u.coeffs()[i]);
  }
  return out;
}

}  // namespace rankforge

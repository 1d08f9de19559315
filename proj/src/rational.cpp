#include "rankforge/rational.hpp"

#include "rankforge/error.hpp"

#include <cctype>

namespace rankforge {

namespace {

std::string normalize_number_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN, UTF-8 E2 88 92
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    out.push_back(text[i]);
  }
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s = normalize_number_text(text);
  if (!is_integer_literal(s))
    throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s = normalize_number_text(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string den_text = s.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-')
    throw Error(ErrorCode::Parse, "bad denominator in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t p) {
  Integer r = value % to_integer(p);
  if (r < 0) r += to_integer(p);
  return to_u64(r);
}

std::uint64_t reduce_mod(const Rational& value, std::uint64_t p) {
  std::uint64_t den = reduce_mod(value.get_den(), p);
  if (den == 0)
    throw Error(ErrorCode::DenominatorNotInvertible,
                "denominator of " + format_rational(value) + " is divisible by " + std::to_string(p));
  Integer num = value.get_num();
  Integer inv;
  Integer pz = to_integer(p);
  mpz_invert(inv.get_mpz_t(), to_integer(den).get_mpz_t(), pz.get_mpz_t());
  Integer r = (num * inv) % pz;
  if (r < 0) r += pz;
  return to_u64(r);
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64)
    throw Error(ErrorCode::InvalidArgument, "integer out of 64-bit range: " + value.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace rankforge

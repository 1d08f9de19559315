#include "rankforge/poly.hpp"

#include <sstream>

namespace rankforge {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

RationalPoly parse_rational_poly(std::string_view text) {
  std::vector<Rational> coeffs;
  for (const auto& part : split_commas(text)) coeffs.push_back(parse_rational(part));
  return RationalPoly(std::move(coeffs));
}

IntegerPoly parse_integer_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  for (const auto& part : split_commas(text)) coeffs.push_back(parse_integer(part));
  return IntegerPoly(std::move(coeffs));
}

std::string format_rational_poly(const RationalPoly& f) {
  return format_poly<Rational>(f, [](const Rational& c) { return format_rational(c); });
}

std::string format_integer_poly(const IntegerPoly& f) {
  return format_poly<Integer>(f, [](const Integer& c) { return c.get_str(); });
}

std::string format_prime_poly(const FqPoly& f) {
  return format_poly<FqElem>(f, [](const FqElem& c) { return format_element(c); });
}

}  // namespace rankforge

#include "conelab/rational.hpp"

#include <cstdio>

#include "conelab/errors.hpp"

namespace conelab {
namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view numerator = text.substr(0, slash);
  const std::string_view denominator =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(numerator) || !is_digits(denominator)) {
    throw ParseError("invalid rational '" + original + "'");
  }
  Rational value;
  value.get_num() = Integer(std::string(numerator));
  value.get_den() = Integer(std::string(denominator));
  if (value.get_den() == 0) {
    throw ParseError("zero denominator in '" + original + "'");
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value.get_d());
  return buffer;
}

Rational power(const Rational& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw InvalidArgument("zero raised to a negative power");
    Rational inverse = 1 / value;
    return power(inverse, -exponent);
  }
  Rational result = 1;
  Rational base = value;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace conelab

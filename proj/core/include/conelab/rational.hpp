#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conelab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalisation). The result
/// is canonical. Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Canonical wire form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Decimal rendering for display only.
std::string to_decimal(const Rational& value, int significant_digits = 12);

inline int sign(const Rational& value) { return sgn(value); }

/// value^exponent for a possibly negative exponent; throws InvalidArgument
/// on 0^(negative).
Rational power(const Rational& value, long exponent);

}  // namespace conelab

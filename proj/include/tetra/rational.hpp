#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tetra {

/// Exact arbitrary-precision rational. GMP keeps every result in lowest
/// terms with a positive denominator; values built from strings are
/// canonicalized by parse_rational.
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d". Decimal points, exponents and zero
/// denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);

}  // namespace tetra

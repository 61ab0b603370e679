#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mptkit {

// Every coordinate, weight and parameter in the library is an exact rational.
using Rational = mpq_class;

// Accepts "a", "-a", "a/b" and finite decimals such as "0.25" or "-1.5".
// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& q);

// Decimal approximation used only for rendering.
double to_double(const Rational& q);

} // namespace mptkit

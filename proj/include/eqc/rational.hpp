#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqc {

// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

// Canonical text form "num/den", always with an explicit denominator and a
// leading '-' for negatives, e.g. "-3/2", "0/1", "5/1".
std::string to_string(const Rational& q);

// Accepts "a/b", "a", and a leading U+2212 minus sign in place of '-'.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace eqc

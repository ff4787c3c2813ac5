#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace goodsets {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form: "p/q" with gcd(p, q) = 1 and q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p/q" or "p" with optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

}  // namespace goodsets

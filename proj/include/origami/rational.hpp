#pragma once

#include <gmpxx.h>

#include <string>

namespace origami {

using Rational = mpq_class;
using Integer = mpz_class;

/// Serializes as "numerator/denominator" (denominator always present, positive).
std::string to_string(const Rational& x);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& s);

/// x^e for any integer e; negative exponents require x != 0.
Rational pow(const Rational& x, long e);

}  // namespace origami

#pragma once

#include <gmpxx.h>

#include <string>

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational from an integral numerator and denominator.
Rational make_rational(long num, long den = 1);

// Parses "num" or "num/den" with an optional sign. Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "num" or "num/den" form, the inverse of parse_rational.
std::string to_string(const Rational& x);

// Converts an Integer known to be small (indices, primes, valuations of
// bounded inputs). Throws std::overflow_error if it does not fit.
long to_long(const Integer& x);

}  // namespace padic

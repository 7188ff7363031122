#pragma once

// Exact arithmetic used wherever the value has to come out exact: the
// Krawtchouk/Hahn evaluations, the Mantel LP and the fractional chromatic LP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypertheta {

/// Arbitrary-precision rational, always kept in canonical (reduced, positive
/// denominator) form by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and finite decimals such as "-0.125" or "2.5e-3";
/// the decimal is converted exactly (0.1 becomes 1/10). Throws InputError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Natural logarithm of a positive rational, computed through mantissa and
/// binary exponent so it stays accurate far beyond the double range.
double log_rational(const Rational& q);

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace hypertheta

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vitushkin {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Renders "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p/q", integers and finite decimals ("0.125", "-3e-2"); the result is exact.
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational exact_from_double(double x);

/// Nearest double (GMP's get_d truncates toward zero).
double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);
BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

}  // namespace vitushkin

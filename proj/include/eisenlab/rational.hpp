#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eisenlab {

/// Exact rational number; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Always "num/den", e.g. "-3/1".
std::string to_string(const Rational& x);

/// Accepts "n", "n/d", with optional sign and surrounding spaces.
Rational parse_rational(std::string_view text);

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);

Integer factorial(int n);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Representative of a mod n in [0, n).
long mod_floor(long a, long n);

/// Inverse of a modulo n; requires gcd(a, n) = 1.
long inverse_mod(long a, long n);

}  // namespace eisenlab

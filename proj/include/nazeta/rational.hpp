#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace nazeta {

using Integer = mpz_class;
// Always kept canonical (reduced, positive denominator). Every helper here
// returns canonical values; raw mpq_class construction from a num/den pair
// must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "a", "-a", "a/b" decimal strings.
Rational parse_rational(const std::string& text);

// q^e for integer q and any integer exponent.
Rational rational_pow(const Rational& base, long exponent);
Integer integer_pow(const Integer& base, unsigned long exponent);

bool is_integer(const Rational& x);

inline const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

// (numerator, denominator) as decimal strings.
std::pair<std::string, std::string> to_string_pair(const Rational& x);

std::string to_string(const Rational& x);

// Returns (p, k) with q = p^k for p prime, or (0, 0) when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q);

}  // namespace nazeta

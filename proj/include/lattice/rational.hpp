#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lattice {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. Every Rational handed out by this library
/// is canonical: positive denominator, numerator and denominator coprime.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws Error(invalid_argument) when
/// den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws Error(parse_failure) on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

Integer parse_integer(std::string_view text);

/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// binom(n, k) as an exact integer; zero when k < 0, n < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace lattice

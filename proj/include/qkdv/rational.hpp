#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qkdv {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

/// num/den in lowest terms; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for any integer a.
/// Zero for k < 0.
Integer binomial(long a, long k);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace qkdv

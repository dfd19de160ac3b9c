#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mf24 {

/// Exact rational number. GMP keeps mpq_class results canonical (lowest
/// terms, positive denominator); values built from a numerator/denominator
/// pair must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

bool is_integer(const Rational& x);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace mf24

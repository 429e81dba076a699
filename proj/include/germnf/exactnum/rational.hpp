#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace germnf {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional sign on the numerator). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// q^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational pow(const Rational& q, long e);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in canonical form; den != 0.
Rational make_rational(const Integer& num, const Integer& den);

/// floor(a / b) and ceil(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Floor and ceiling of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Converts to a machine integer; throws std::overflow_error if it does not fit.
long to_long(const Integer& z);

}  // namespace germnf

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lvl2 {

// GMP keeps mpq_class values canonical (reduced, positive denominator) after
// every arithmetic operation, which is the representation invariant we rely on.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "p/q" or a finite decimal such as "-0.125". The result is
// canonical.
Rational parse_rational(std::string_view text);

// Always "p/q", even for integers ("3/1").
std::string to_fraction_string(const Rational& value);

// Natural form: "3" for integers, "745/8" otherwise.
std::string to_string(const Rational& value);

// Decimal expansions with `digits` digits after the point, rounded toward
// -inf / +inf respectively.
std::string decimal_floor(const Rational& value, unsigned digits);
std::string decimal_ceil(const Rational& value, unsigned digits);
// Round half away from zero; only for display of midpoints.
std::string decimal_nearest(const Rational& value, unsigned digits);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

// 10^k as an exact rational; negative k gives 1/10^|k|.
Rational pow10(int k);
BigInt factorial(unsigned long n);

// Position of the most significant bit of |value|, i.e. floor(log2 |value|).
// value must be nonzero.
long floor_log2(const Rational& value);

// Dyadic rounding with `bits` significant bits relative to the magnitude of
// value. floor_dyadic(x) <= x <= ceil_dyadic(x); both are exact at zero.
Rational floor_dyadic(const Rational& value, unsigned bits);
Rational ceil_dyadic(const Rational& value, unsigned bits);

}  // namespace lvl2

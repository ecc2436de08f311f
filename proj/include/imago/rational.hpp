#pragma once

#include <gmpxx.h>

#include <string>

namespace imago {

using BigInt = mpz_class;

// Exact rational, always stored reduced with positive denominator.
// mpq_class canonicalizes on construction from mpq helpers; the factory
// functions below are the only construction paths used by the library.
using BigRatio = mpq_class;

// num/den reduced to lowest terms; den must be nonzero.
BigRatio make_ratio(const BigInt& num, const BigInt& den);

// 2^-m as an exact rational.
BigRatio pow2_inv(unsigned long m);

// 1 - 2^-s as an exact rational.
BigRatio one_minus_pow2_inv(unsigned long s);

// Accepts "p/q", an integer, or a decimal literal ("0.3" -> 3/10, exact).
BigRatio parse_ratio(const std::string& text);

std::string ratio_to_string(const BigRatio& r);

// Display-only double approximation.
double ratio_to_double(const BigRatio& r);

}  // namespace imago

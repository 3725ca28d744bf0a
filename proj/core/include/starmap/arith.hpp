#pragma once

#include <gmpxx.h>

#include <string>

namespace starmap {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Exact quotient; throws Inconsistency if `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

/// Rational -> integer; throws Inconsistency if not integral.
BigInt to_integer(const Rational& q, const char* context);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace starmap

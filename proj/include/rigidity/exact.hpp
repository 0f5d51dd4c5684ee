#pragma once

#include <gmpxx.h>

#include <string>

namespace rigidity {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

/// Binomial coefficient with the out-of-range convention C(a,b) = 0 for
/// b < 0 or b > a (which covers negative upper index as well).
BigInt binomial(long a, long b);

/// k!, memoized. The cache stops growing once its contents exceed the
/// configured decimal-digit budget; larger arguments are computed uncached.
BigInt factorial(unsigned long k);
void set_factorial_cache_digit_budget(unsigned long digits);

/// Floor square root of a nonnegative big integer (Newton iteration with a
/// hardware-sqrt seed, exact at every size).
BigInt isqrt(const BigInt& v);

/// True iff v is a perfect square; on success *root receives sqrt(v).
bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);

/// Canonical "num/den" serialization (always carries the denominator).
std::string fraction_string(const Rational& q);
/// Parses "num/den" or "num".
Rational parse_fraction(const std::string& text);

int sign(const Rational& q);

}  // namespace rigidity

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "stabforge/errors.hpp"

namespace stabforge {

// Exact arithmetic throughout; nothing in the pipeline ever rounds.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational: reduced, denominator > 0. Throws DomainError on
// zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

inline Rational rational_of(long n) { return Rational(static_cast<long>(n)); }

// Strict "p" / "p/q" / "-p/q" form, no whitespace, no signs inside q.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(long n);
Integer binomial(long n, long k);  // 0 for k < 0 or k > n; n must be >= 0

}  // namespace stabforge

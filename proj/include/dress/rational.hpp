#pragma once

#include <gmpxx.h>

#include <string>

namespace dress {

/// Exact rational scalar. GMP keeps mpq_class values canonical (den > 0,
/// gcd(|num|, den) = 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Builds num/den in canonical form. Throws DivisionByZero for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

}  // namespace dress

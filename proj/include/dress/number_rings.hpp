#pragma once

#include <vector>

#include "dress/errors.hpp"
#include "dress/rational.hpp"

namespace dress {

// The minimal Dress ring of Q is Z_S, the localization of Z at the
// multiplicative set generated by the primes that are sums of two squares:
// 2 = 1/(1 + 1^2) inverted, and every p = 1 (mod 4).

/// Distinct prime factors of |n| in increasing order (trial division, then
/// Pollard-Brent rho). Throws InvalidArgument for n = 0.
std::vector<Integer> prime_factors(const Integer& n);

/// p is 2 or p = 1 (mod 4). Assumes p prime.
inline bool is_s_prime(const Integer& p) { return p == 2 || mpz_fdiv_ui(p.get_mpz_t(), 4) == 1; }

/// Every prime factor of the reduced denominator is an S-prime.
bool zs_member(const Rational& q);

struct ZSRational {
  Rational value;
  bool member;
};
inline ZSRational make_zs(const Rational& q) { return {q, zs_member(q)}; }

/// g generates the Z_S-ideal (a, b); u a + v b = g with u, v in Z_S.
/// g is positive and free of S-primes.
struct ZSGcd {
  Rational g;
  Rational u;
  Rational v;
};

/// Throws InvalidArgument when a = b = 0.
ZSGcd zs_gcd(const Rational& a, const Rational& b);

}  // namespace dress

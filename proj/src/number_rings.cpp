#include "dress/number_rings.hpp"

#include <algorithm>

namespace dress {

namespace {

constexpr unsigned long kTrialLimit = 10000;

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = Integer(seed) % n;
  Integer c = Integer(seed * 7 + 1) % n;
  Integer m = 64;
  Integer g = 1;
  Integer r = 1;
  Integer q = 1;
  Integer x;
  Integer ys;
  auto step = [&](const Integer& v) {
    Integer w = (v * v + c) % n;
    return w;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = step(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.push_back(n);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

// q = unit * stripped, with unit a signed ratio of S-primes and stripped
// positive and free of them.
struct Stripped {
  Rational stripped;
  Rational unit;
};

Integer strip_s_primes(Integer n) {
  for (const auto& p : prime_factors(n)) {
    if (!is_s_prime(p)) continue;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) n /= p;
  }
  return n;
}

Stripped strip(const Rational& q) {
  Integer num = strip_s_primes(abs(q.get_num()));
  Integer den = strip_s_primes(q.get_den());
  Rational s = make_rational(num, den);
  Rational unit = q / s;
  return {s, unit};
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw InvalidArgument("prime_factors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p <= kTrialLimit && m != 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    out.emplace_back(p);
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) m /= p;
  }
  if (m != 1) {
    std::vector<Integer> big;
    factor_into(m, big);
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    out.insert(out.end(), big.begin(), big.end());
  }
  return out;
}

bool zs_member(const Rational& q) {
  if (q.get_den() == 1) return true;
  auto primes = prime_factors(q.get_den());
  return std::all_of(primes.begin(), primes.end(), [](const Integer& p) { return is_s_prime(p); });
}

ZSGcd zs_gcd(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw InvalidArgument("zs_gcd of (0, 0)");
  Stripped sa = a == 0 ? Stripped{0, 1} : strip(a);
  Stripped sb = b == 0 ? Stripped{0, 1} : strip(b);

  Integer l;
  mpz_lcm(l.get_mpz_t(), sa.stripped.get_den_mpz_t(), sb.stripped.get_den_mpz_t());
  Integer big_a = sa.stripped.get_num() * (l / sa.stripped.get_den());
  Integer big_b = sb.stripped.get_num() * (l / sb.stripped.get_den());
  Integer g;
  Integer x;
  Integer y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), big_a.get_mpz_t(), big_b.get_mpz_t());

  ZSGcd out;
  out.g = make_rational(g, l);
  out.u = a == 0 ? Rational(0) : Rational(Rational(x) / sa.unit);
  out.v = b == 0 ? Rational(0) : Rational(Rational(y) / sb.unit);
  return out;
}

}  // namespace dress

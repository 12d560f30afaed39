#include "dress/real_roots.hpp"

#include "dress/errors.hpp"

namespace dress {

namespace {

constexpr int kMaxRefinements = 10000;

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  return m;
}

}  // namespace

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("root bound of zero");
  Rational lc = abs(p.leading());
  Rational best = 0;
  auto cs = p.coeffs();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    Rational r = abs(cs[i]) / lc;
    if (r > best) best = r;
  }
  return best + 1;
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm chain of zero");
  Polynomial f = squarefree_part(p);
  bound_ = cauchy_bound(f);
  chain_.push_back(f);
  if (f.is_constant()) return;
  chain_.push_back(f.derivative());
  while (!chain_.back().is_constant()) {
    Polynomial r = divrem(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign, and monic keeps coefficients small.
    Rational s = abs(r.leading());
    chain_.push_back((-1 / s) * r);
  }
}

int SturmChain::variations(const Rational& t) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t SturmChain::count(const Endpoint& lo, const Endpoint& hi) const {
  if (chain_.front().is_constant()) return 0;
  Rational a = lo ? *lo : -bound_;
  Rational b = hi ? *hi : bound_;
  if (a >= b) return 0;
  int diff = variations(a) - variations(b);
  return diff > 0 ? static_cast<std::size_t>(diff) : 0;
}

std::size_t sturm_count(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmChain(p).count(lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
  SturmChain chain(p);
  const Polynomial& f = chain.squarefree();
  std::vector<IsolatingInterval> out;
  if (f.is_constant()) return out;

  // Rational roots of f have the form k / lc for the primitive integer scaling.
  Integer lc = primitive_integer_coeffs(f).back();
  Rational grid = Rational(1, 1) / Rational(lc);
  grid.canonicalize();

  struct Pending {
    Rational lo;
    Rational hi;
    std::size_t roots;
  };
  std::vector<Pending> stack;
  Rational bound = chain.root_bound();
  std::size_t total = chain.count(-bound, bound);
  if (total != 0) stack.push_back({-bound, bound, total});

  // Depth-first with the right half pushed first yields increasing order.
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.roots == 1) {
      Rational lo = cur.lo;
      Rational hi = cur.hi;
      std::optional<Rational> exact;
      if (f(hi) == 0) exact = hi;
      int guard = 0;
      while (!exact && hi - lo >= grid) {
        if (++guard > kMaxRefinements) throw InternalError("root refinement did not converge");
        Rational mid = midpoint(lo, hi);
        if (chain.count(lo, mid) == 1) {
          hi = mid;
          if (f(hi) == 0) exact = hi;
        } else {
          lo = mid;
        }
      }
      if (!exact) {
        // At most one multiple of 1/lc lies in (lo, hi].
        Integer k;
        Rational scaled = hi * Rational(lc);
        mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        Rational cand = make_rational(k, lc);
        if (cand > lo && f(cand) == 0) exact = cand;
      }
      if (exact) {
        out.push_back({*exact, *exact, exact});
      } else {
        out.push_back({lo, hi, std::nullopt});
      }
      continue;
    }
    Rational mid = midpoint(cur.lo, cur.hi);
    std::size_t left = chain.count(cur.lo, mid);
    std::size_t right = cur.roots - left;
    if (right != 0) stack.push_back({mid, cur.hi, right});
    if (left != 0) stack.push_back({cur.lo, mid, left});
  }
  return out;
}

std::string_view to_string(SignPattern s) {
  switch (s) {
    case SignPattern::NoRoots: return "no-roots";
    case SignPattern::AllPositive: return "all-positive";
    case SignPattern::AllNegative: return "all-negative";
    case SignPattern::Mixed: return "mixed";
    case SignPattern::HasZero: return "has-zero";
  }
  return "?";
}

SignPattern sign_at_roots(const Polynomial& q, const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("sign_at_roots: p is zero");
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return SignPattern::NoRoots;
  if (q.is_zero()) return SignPattern::HasZero;

  Polynomial common = gcd(p, q);
  std::optional<SturmChain> common_chain;
  if (!common.is_constant()) common_chain.emplace(common);
  SturmChain q_chain(q);
  const Polynomial f = squarefree_part(p);

  bool pos = false;
  bool neg = false;
  for (const auto& iv : roots) {
    int s = 0;
    if (iv.exact) {
      s = q.sign_at(*iv.exact);
    } else if (common_chain && common_chain->count(iv.lo, iv.hi) > 0) {
      // The single root of p in (lo, hi) is then a root of gcd(p, q).
      s = 0;
    } else {
      Rational lo = iv.lo;
      Rational hi = iv.hi;
      int steps = 0;
      while (true) {
        if (q.sign_at(lo) != 0 && q.sign_at(hi) != 0 && q_chain.count(lo, hi) == 0) {
          s = q.sign_at(lo);
          break;
        }
        if (++steps > kMaxRefinements) throw InternalError("sign_at_roots: bisection cap exceeded");
        Rational mid = midpoint(lo, hi);
        int fm = f.sign_at(mid);
        if (fm == 0) {
          s = q.sign_at(mid);
          break;
        }
        if (f.sign_at(lo) * fm < 0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
    }
    if (s == 0) return SignPattern::HasZero;
    (s > 0 ? pos : neg) = true;
  }
  if (pos && neg) return SignPattern::Mixed;
  return pos ? SignPattern::AllPositive : SignPattern::AllNegative;
}

bool is_gamma(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  auto cs = p.coeffs();
  const std::size_t deg = cs.size() - 1;
  if (deg % 2 == 1) return false;
  if (deg == 2) {
    Rational disc = cs[1] * cs[1] - 4 * cs[2] * cs[0];
    return disc < 0;
  }
  return sturm_count(p) == 0;
}

bool is_gamma_plus(const Polynomial& p) { return is_gamma(p) && p.sign_at(0) > 0; }

}  // namespace dress

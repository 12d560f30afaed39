#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dress/polynomial.hpp"

namespace dress {

/// Interval endpoint; std::nullopt stands for the infinite end in its direction.
using Endpoint = std::optional<Rational>;

/// Sturm chain of the squarefree part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  /// Number of distinct real roots in (lo, hi].
  std::size_t count(const Endpoint& lo, const Endpoint& hi) const;
  const Polynomial& squarefree() const { return chain_.front(); }
  /// Every real root lies strictly inside (-bound, bound).
  const Rational& root_bound() const { return bound_; }

 private:
  int variations(const Rational& t) const;

  std::vector<Polynomial> chain_;
  Rational bound_;
};

/// Distinct real roots of p in (lo, hi]. Throws ZeroPolynomial for p = 0.
std::size_t sturm_count(const Polynomial& p, const Endpoint& lo = std::nullopt,
                        const Endpoint& hi = std::nullopt);

/// 1 + max |c_i / lc|.
Rational cauchy_bound(const Polynomial& p);

/// Either an exact rational root (lo == hi == *exact) or an open interval
/// (lo, hi) holding exactly one irrational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
};

/// One interval per distinct real root, increasing. Throws ZeroPolynomial.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

enum class SignPattern { NoRoots, AllPositive, AllNegative, Mixed, HasZero };

std::string_view to_string(SignPattern s);
inline bool is_definite(SignPattern s) {
  return s == SignPattern::NoRoots || s == SignPattern::AllPositive || s == SignPattern::AllNegative;
}

/// Signs of q at the real roots of p. Throws ZeroPolynomial for p = 0.
SignPattern sign_at_roots(const Polynomial& q, const Polynomial& p);

/// p != 0 and p has no real root.
bool is_gamma(const Polynomial& p);
/// p(t) > 0 for every real t.
bool is_gamma_plus(const Polynomial& p);

}  // namespace dress

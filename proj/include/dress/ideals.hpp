#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dress/dress_ring.hpp"

namespace dress {

class ZeroIdeal : public Error {
 public:
  ZeroIdeal() : Error("the zero ideal has no such generator") {}
};

/// Generators of a nonzero finitely generated ideal of D.
class IdealGens {
 public:
  /// Throws ZeroIdeal when empty or all generators vanish.
  explicit IdealGens(std::vector<DressElement> gens);
  const std::vector<DressElement>& gens() const { return gens_; }

 private:
  std::vector<DressElement> gens_;
};

/// s with J^2 = sD, namely the sum of the squared generators. Verified before
/// returning: every r_i r_j / s lies in D.
DressElement ideal_square(const IdealGens& J);

/// Principality data for (a, b) written over a common denominator gamma as
/// (f/gamma, g/gamma), with M = gcd(f, g), f = M f', g = M g'.
struct PrincipalityReport {
  Polynomial gcd_part;  // M
  Polynomial fprime;
  Polynomial gprime;
  Polynomial denominator;  // gamma
  int s = 0;  // max(deg f', deg g')
  bool principal = false;
  std::optional<DressElement> generator;
  /// (lambda, mu) with generator = lambda * a + mu * b exactly.
  std::optional<std::pair<DressElement, DressElement>> expansion;
};

/// Full report; the generator is built and verified when s is even.
/// Throws ZeroIdeal when a = b = 0.
PrincipalityReport analyze_principality(const DressElement& a, const DressElement& b);
bool is_principal(const DressElement& a, const DressElement& b);
/// nullopt exactly when (a, b) is not principal.
std::optional<PrincipalityReport> principal_generator(const DressElement& a, const DressElement& b);

/// Inverse of the fractional ideal (a, b): generators a/s, b/s with
/// s = a^2 + b^2, so that a(a/s) + b(b/s) = 1. The generators are fractional
/// and need not lie in D.
struct IdealInverse {
  RationalFunction first;
  RationalFunction second;
  DressElement certificate;  // s
};
IdealInverse ideal_inverse(const DressElement& a, const DressElement& b);

}  // namespace dress

#pragma once

#include <string>

#include "dress/polynomial.hpp"

namespace dress {

/// Element of Q(X) kept reduced: gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Polynomial(c)) {}  // NOLINT

  /// Reduces num/den and makes the denominator monic.
  static RationalFunction normalize(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// deg num - deg den, -inf for zero.
  Degree degree() const;

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction::normalize(num, den);
}
inline Degree rf_degree(const RationalFunction& r) { return r.degree(); }

/// r(aX + b). A ring automorphism of Q(X) for a != 0; throws InvalidArgument for a = 0.
RationalFunction affine_substitute(const RationalFunction& r, const Rational& a, const Rational& b);

/// "p" for polynomials, "(p)/(q)" otherwise.
std::string to_string(const RationalFunction& r);

}  // namespace dress

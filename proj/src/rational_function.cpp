#include "dress/rational_function.hpp"

#include "dress/errors.hpp"

namespace dress {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  Polynomial g = gcd(num, den);
  Polynomial n = exact_quotient(num, g);
  Polynomial d = exact_quotient(den, g);
  Rational lc = d.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n = inv * n;
    d = inv * d;
  }
  return RationalFunction(std::move(n), std::move(d), 0);
}

Degree RationalFunction::degree() const {
  if (is_zero()) return Degree::neg_inf();
  return num_.degree() - den_.degree();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return normalize(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  auto k = static_cast<unsigned>(e);
  return RationalFunction(num_.pow(k), den_.pow(k), 0);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction::normalize(a.num_ + b.num_, a.den_);
  return RationalFunction::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // Cross-cancel first so the products stay reduced.
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  Polynomial den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  return RationalFunction::normalize(num, den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction affine_substitute(const RationalFunction& r, const Rational& a, const Rational& b) {
  if (a == 0) throw InvalidArgument("affine substitution with a = 0");
  return RationalFunction::normalize(r.num().compose_affine(a, b), r.den().compose_affine(a, b));
}

std::string to_string(const RationalFunction& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

}  // namespace dress

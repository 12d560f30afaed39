#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dress/degree.hpp"
#include "dress/rational.hpp"

namespace dress {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of X^i;
/// the leading coefficient is nonzero and the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: constants embed into Q[X]
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The indeterminate X.
  static Polynomial x();
  static Polynomial monomial(const Rational& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Coefficient of X^i, zero beyond the degree.
  Rational coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return sign((*this)(t)); }

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;
  /// p(aX + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(int c, const Polynomial& p) { return Rational(c) * p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; deg remainder < deg b. Throws DivisionByZero for b = 0.
DivRem divrem(const Polynomial& a, const Polynomial& b);
/// a / b where b is known to divide a; throws InvalidArgument otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; zero if either argument is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), monic. Same distinct roots as p.
Polynomial squarefree_part(const Polynomial& p);

/// Yun's decomposition p = lc * prod f_i^i with f_i monic, squarefree and
/// pairwise coprime. Factors equal to 1 are omitted.
struct SquarefreeFactor {
  Polynomial factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Scales p to a primitive integer polynomial with positive leading
/// coefficient; the result has the same roots.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p);

/// Canonical printed form, e.g. "X^2 - (1/2)*X + 3". Reparses to the same value.
std::string to_string(const Polynomial& p);

}  // namespace dress

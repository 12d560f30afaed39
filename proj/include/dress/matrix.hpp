#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dress/dress_ring.hpp"

namespace dress {

/// 2x2 matrix over D, row-major (a b; c d).
struct Mat2 {
  DressElement a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }
  /// (p q; 0 0).
  static Mat2 row(const DressElement& p, const DressElement& q) { return {p, q, 0, 0}; }
  /// Checked construction from arbitrary rational functions.
  static Mat2 from(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                   const RationalFunction& d);

  DressElement determinant() const { return a * d - b * c; }
  DressElement trace() const { return a + d; }
  bool is_singular() const { return determinant().is_zero(); }
  bool has_zero_second_row() const { return c.is_zero() && d.is_zero(); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

/// "[[a, b], [c, d]]" with canonical entries.
std::string to_string(const Mat2& m);

/// M^2 == M, compared exactly.
bool is_idempotent(const Mat2& m);

/// (p q; r 1-p) with r = p(1-p)/q when that quotient lies in D.
/// Throws DivisionByZero for q = 0.
std::optional<Mat2> complete_idempotent_pair(const DressElement& p, const DressElement& q);

/// (1 u; 0 1).
Mat2 shear(const DressElement& u);
/// (0 1; 1 0).
Mat2 swap_matrix();

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible over D") {}
};

/// Inverse over D; throws NotInvertible unless the determinant is a unit of D.
Mat2 inverse(const Mat2& p);

/// factors[0] * factors[1] * ... * factors[n-1] == target.
struct Factorization {
  Mat2 target;
  std::vector<Mat2> factors;

  /// Ordered product of the factors; the identity when empty.
  Mat2 product() const;
};

/// Maps the target and every factor E to P^{-1} E P.
Factorization conjugate_factorization(const Factorization& f, const Mat2& p);

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// From a factorization of (p q; 0 0) builds one of (q p; 0 0): conjugate by
/// (0 1; 1 0) and prepend the idempotent (1 1; 0 0). Throws ShapeError when
/// the target's second row is not zero.
Factorization swap_factorization(const Factorization& f);

enum class VerificationFailure { None, EntryNotInRing, NotIdempotent, ProductMismatch };

struct VerificationReport {
  bool passed = true;
  VerificationFailure failure = VerificationFailure::None;
  /// Offending factor for EntryNotInRing / NotIdempotent; factors.size() means the target.
  std::size_t index = 0;
  std::string detail;
};

VerificationReport verify_factorization(const Factorization& f);

}  // namespace dress

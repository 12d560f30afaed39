#pragma once

#include <string>

#include "dress/matrix.hpp"
#include "dress/real_roots.hpp"

namespace dress {

/// No implemented construction covers the given row.
class HypothesisNotMet : public Error {
 public:
  HypothesisNotMet(SignPattern q_at_roots_of_p, SignPattern p_at_roots_of_q, Degree deg_x, Degree deg_y,
                   Degree deg_gcd);
  SignPattern q_at_roots_of_p() const { return q_at_p_; }
  SignPattern p_at_roots_of_q() const { return p_at_q_; }
  Degree deg_x() const { return deg_x_; }
  Degree deg_y() const { return deg_y_; }
  Degree deg_gcd() const { return deg_gcd_; }

 private:
  SignPattern q_at_p_;
  SignPattern p_at_q_;
  Degree deg_x_;
  Degree deg_y_;
  Degree deg_gcd_;
};

/// Factors (p q; 0 0) into idempotents over D. Covers: a zero entry, one
/// entry dividing the other, q of one sign at the real roots of p with
/// deg p >= deg q (or symmetrically), and the small-degree cases of
/// factor_small. The result is verified before it is returned. Throws
/// HypothesisNotMet otherwise.
Factorization factor_row_matrix(const DressElement& p, const DressElement& q);

/// Small-degree cases over the common denominator (x/g, y/g): both numerators
/// of degree <= 1, or both of degree 2 with a nonconstant common factor (one
/// of degree 2 and one lower also works after a shear). Throws ShapeError
/// for other shapes.
Factorization factor_small(const DressElement& p, const DressElement& q);

/// Evidence that a + b z is not a unit for a = X/(1+X^2), b = (X^2-1)/(1+X^2)
/// even though a^2 + b^2 is: with z = f/g (g monic, hence positive), the
/// numerator f1 = X g + (X^2 - 1) f of a + bz is positive at 1 and negative at
/// -1.
struct StableRangeEvidence {
  bool pair_is_comaximal = false;  // a^2 + b^2 is a unit
  Polynomial f1;
  int sign_at_one = 0;
  int sign_at_minus_one = 0;
  bool non_unit = false;  // a + b z verified not to be a unit
};

StableRangeEvidence stable_range_witness_check(const DressElement& z);

}  // namespace dress

#pragma once

#include "dress/polynomial.hpp"

namespace dress {

/// Which product the certificate multiplies into delta.
enum class CertificateForm {
  SquareOfFirst,   // delta = x^2 + y * beta
  SquareOfSecond,  // delta = x * beta + y^2
};

/// beta = -scale * base, where base = +-c (1 + X^2)^{e/2} is root-free of
/// degree deg x (deg x even) or deg x - 1 (deg x odd), with sign opposite to
/// the sign of y at the roots of x.
struct PositivityCertificate {
  CertificateForm form = CertificateForm::SquareOfFirst;
  Polynomial beta;
  Polynomial delta;
  Rational scale;
  Polynomial base;
};

/// beta with delta = x^2 + y beta positive everywhere and deg delta = 2 deg x.
/// Requires x, y nonzero of equal degree and y of one sign at the real roots
/// of x; throws InvalidArgument otherwise.
PositivityCertificate positivity_certificate(const Polynomial& x, const Polynomial& y);

/// Mirror form: beta (the eta of the mirror statement) with
/// delta = x beta + y^2 positive everywhere; requires x of one sign at the
/// real roots of y.
PositivityCertificate positivity_certificate_b(const Polynomial& x, const Polynomial& y);

}  // namespace dress

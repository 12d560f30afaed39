#include "dress/certificate.hpp"

#include "dress/errors.hpp"
#include "dress/real_roots.hpp"

namespace dress {

namespace {

constexpr int kMaxHalvings = 512;

}  // namespace

PositivityCertificate positivity_certificate(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) throw InvalidArgument("positivity_certificate: zero polynomial");
  if (x.degree() != y.degree()) throw InvalidArgument("positivity_certificate: deg x != deg y");
  SignPattern pattern = sign_at_roots(y, x);
  if (!is_definite(pattern)) {
    throw InvalidArgument("positivity_certificate: y is not of one sign at the roots of x (" +
                          std::string(to_string(pattern)) + ")");
  }

  const int n = x.degree().value();
  const int e = n % 2 == 0 ? n : n - 1;
  // base * y must be negative at the roots of x; without roots pick the sign
  // that also makes the top coefficient of x^2 - base*y positive.
  int y_sign = pattern == SignPattern::AllPositive   ? 1
               : pattern == SignPattern::AllNegative ? -1
                                                     : sign(y.leading());
  int base_sign = -y_sign;

  Rational c = 1;
  Rational lx2 = x.leading() * x.leading();
  Rational ly = y.leading();
  if (e == n && base_sign * sign(ly) > 0) {
    // Need lc(x)^2 - c |lc(y)| > 0.
    Rational limit = lx2 / abs(ly);
    if (c >= limit) c = limit / 2;
  }
  Polynomial base = Rational(base_sign * c) * Polynomial(std::vector<Rational>{1, 0, 1}).pow(static_cast<unsigned>(e / 2));
  Polynomial x2 = x * x;
  Polynomial base_y = base * y;

  Rational s = 1;
  for (int i = 0; i < kMaxHalvings; ++i, s /= 2) {
    Polynomial delta = x2 - s * base_y;
    if (!is_gamma_plus(delta)) continue;
    Polynomial beta = -(s * base);
    PositivityCertificate cert{CertificateForm::SquareOfFirst, beta, delta, s, base};
    if (x2 + y * beta != delta || delta.degree() != Degree(2 * n) || !is_gamma(beta)) {
      throw InternalError("positivity_certificate: invariant check failed");
    }
    return cert;
  }
  throw InternalError("positivity_certificate: halving search exceeded its cap");
}

PositivityCertificate positivity_certificate_b(const Polynomial& x, const Polynomial& y) {
  PositivityCertificate cert = positivity_certificate(y, x);
  cert.form = CertificateForm::SquareOfSecond;
  return cert;
}

}  // namespace dress

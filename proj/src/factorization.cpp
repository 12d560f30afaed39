#include "dress/factorization.hpp"

#include <string>

#include "dress/certificate.hpp"

namespace dress {

HypothesisNotMet::HypothesisNotMet(SignPattern q_at_roots_of_p, SignPattern p_at_roots_of_q, Degree deg_x,
                                   Degree deg_y, Degree deg_gcd)
    : Error("no factorization route applies: q at roots of p " + std::string(to_string(q_at_roots_of_p)) +
            ", p at roots of q " + std::string(to_string(p_at_roots_of_q)) + ", numerator degrees " +
            deg_x.to_string() + "/" + deg_y.to_string() + ", gcd degree " + deg_gcd.to_string()),
      q_at_p_(q_at_roots_of_p),
      p_at_q_(p_at_roots_of_q),
      deg_x_(deg_x),
      deg_y_(deg_y),
      deg_gcd_(deg_gcd) {}

namespace {

const Polynomial& one_plus_x2() {
  static const Polynomial p(std::vector<Rational>{1, 0, 1});
  return p;
}

DressElement element(const Polynomial& num, const Polynomial& den) {
  return DressElement::from(RationalFunction::normalize(num, den));
}

// (p 0; 0 0) = (1 -1; 0 0)(1 0; 1-p 0).
std::vector<Mat2> scalar_factors(const DressElement& p) {
  return {Mat2{1, -1, 0, 0}, Mat2{1, 0, DressElement(1) - p, 0}};
}

// (p rp; 0 0) = (p 0; 0 0)(1 r; 0 0).
Factorization proportional_row(const DressElement& p, const DressElement& r) {
  Factorization f{Mat2::row(p, r * p), scalar_factors(p)};
  f.factors.push_back(Mat2{1, r, 0, 0});
  return f;
}

// Trivial shapes; nullopt when none applies.
std::optional<Factorization> factor_trivial(const DressElement& p, const DressElement& q) {
  if (p.is_zero() && q.is_zero()) return Factorization{Mat2::zero(), {Mat2::zero()}};
  if (p.is_zero()) return Factorization{Mat2::row(0, q), {Mat2{1, 0, 0, 0}, Mat2{0, q, 0, 1}}};
  if (q.is_zero()) return Factorization{Mat2::row(p, 0), scalar_factors(p)};
  if (auto r = DressElement::try_from(q.value() / p.value())) return proportional_row(p, *r);
  if (auto r = DressElement::try_from(p.value() / q.value())) return swap_factorization(proportional_row(q, *r));
  return std::nullopt;
}

bool hypothesis_holds(const Polynomial& x, const Polynomial& y) {
  return x.degree() >= y.degree() && is_definite(sign_at_roots(y, x));
}

// (x/g y/g; 0 0) with deg x >= deg y and y of one sign at the real roots of x.
Factorization factor_definite(const Polynomial& x, const Polynomial& y, const Polynomial& gamma) {
  if (x.degree() > y.degree()) {
    // (p q; 0 0) = S (p p+q; 0 0) S^{-1} with S = (1 1; 0 1); p + q has the
    // same signs as q at the roots of p.
    Factorization inner = factor_definite(x, x + y, gamma);
    return conjugate_factorization(inner, shear(-1));
  }
  const int n = x.degree().value();
  if (gamma.degree() > Degree(n + 1)) {
    // (x/g y/g; 0 0) = (t/g 0; 0 0)(x/t y/t; 0 0), t root-free of degree n or n + 1.
    const int t_deg = n % 2 == 0 ? n : n + 1;
    Polynomial tau = one_plus_x2().pow(static_cast<unsigned>(t_deg / 2));
    Factorization inner = factor_definite(x, y, tau);
    Factorization out{Mat2::row(element(x, gamma), element(y, gamma)), scalar_factors(element(tau, gamma))};
    out.factors.insert(out.factors.end(), inner.factors.begin(), inner.factors.end());
    return out;
  }

  // Now deg gamma + deg beta = 2n = deg delta, so delta/(gamma beta) is a unit
  // and B = (y/g x/g; 0 0) = (delta/(g beta) 0; 0 0) T with T idempotent.
  PositivityCertificate cert = positivity_certificate(x, y);
  const Polynomial& beta = cert.beta;
  const Polynomial& delta = cert.delta;
  DressElement w = element(delta, gamma * beta);
  if (!is_unit(w)) throw InternalError("factor_row_matrix: delta/(gamma beta) is not a unit");
  Mat2 t{element(beta * y, delta), element(beta * x, delta), element(y * x, delta), element(x * x, delta)};

  Factorization swapped{Mat2::row(element(y, gamma), element(x, gamma)), scalar_factors(w)};
  swapped.factors.push_back(t);
  return swap_factorization(swapped);
}

Factorization factor_definite_either(const Polynomial& x, const Polynomial& y, const Polynomial& gamma) {
  if (hypothesis_holds(x, y)) return factor_definite(x, y, gamma);
  return swap_factorization(factor_definite(y, x, gamma));
}

// Both numerators of degree 2 sharing exactly one linear factor.
Factorization factor_shared_linear(const Polynomial& x, const Polynomial& y, const Polynomial& gamma) {
  Polynomial m = gcd(x, y);
  if (m.degree() == 2) return proportional_row(element(x, gamma), DressElement(Rational(y.leading() / x.leading())));
  const Rational root = -m.coeff(0);

  // Move the shared root to 0.
  Polynomial xs = x.compose_affine(1, root);
  Polynomial ys = y.compose_affine(1, root);
  Polynomial gs = gamma.compose_affine(1, root);
  // xs = X(a1 X + a0), ys = X(b1 X + b0) = rho xs + sigma X.
  Rational rho = ys.coeff(2) / xs.coeff(2);
  Rational sigma = ys.coeff(1) - rho * xs.coeff(1);
  if (sigma == 0) {
    return proportional_row(element(x, gamma), DressElement(rho));
  }

  const Polynomial X = Polynomial::x();
  const int lead_sign = sign(xs.coeff(2));
  Polynomial delta;
  Rational c0 = lead_sign;
  for (int i = 0;; ++i, c0 *= 2) {
    if (i > 256) throw InternalError("factor_small: no root-free delta found");
    delta = xs + X + Polynomial(c0);
    if (is_gamma(delta)) break;
  }
  Polynomial x_over_X = exact_quotient(xs, X);
  Polynomial z = (1 / sigma) * (delta - xs) * x_over_X;
  DressElement a = element(xs, delta);
  Mat2 e{a, element(sigma * X, delta), element(z, delta), DressElement(1) - a};

  Factorization b{Mat2::row(a, element(sigma * X, delta)), {Mat2{1, 0, 0, 0}, e}};
  // Conjugating by (1 rho; 0 1) turns (p q; 0 0) into (p rho p + q; 0 0).
  Factorization bs = conjugate_factorization(b, shear(DressElement(rho)));

  Factorization shifted{Mat2::row(element(xs, gs), element(ys, gs)), scalar_factors(element(delta, gs))};
  shifted.factors.insert(shifted.factors.end(), bs.factors.begin(), bs.factors.end());

  // Undo the change of coordinates entry by entry; it is a ring automorphism
  // preserving D, so idempotency and products carry over.
  auto back = [&](const DressElement& r) { return DressElement::from(affine_substitute(r.value(), 1, -root)); };
  auto back_m = [&](const Mat2& mm) { return Mat2{back(mm.a), back(mm.b), back(mm.c), back(mm.d)}; };
  Factorization out{back_m(shifted.target), {}};
  for (const auto& f : shifted.factors) out.factors.push_back(back_m(f));
  return out;
}

bool small_shape(const Polynomial& x, const Polynomial& y) {
  if (x.degree() <= 1 && y.degree() <= 1) return true;
  Degree hi = max(x.degree(), y.degree());
  return hi == 2 && gcd(x, y).degree() >= 1;
}

Factorization factor_small_impl(const Polynomial& x, const Polynomial& y, const Polynomial& gamma) {
  DressElement p = element(x, gamma);
  DressElement q = element(y, gamma);
  if (auto f = factor_trivial(p, q)) return *f;
  if (x.degree() <= 1 && y.degree() <= 1) {
    // Without a common root one of the two sign hypotheses holds trivially.
    return factor_definite_either(x, y, gamma);
  }
  if (x.degree() == 2 && y.degree() == 2) return factor_shared_linear(x, y, gamma);
  if (x.degree() == 2) {
    // gcd(x, x + y) = gcd(x, y) and x + y has degree 2.
    return conjugate_factorization(factor_shared_linear(x, x + y, gamma), shear(-1));
  }
  return swap_factorization(conjugate_factorization(factor_shared_linear(y, y + x, gamma), shear(-1)));
}

Factorization checked(Factorization f, const Mat2& target) {
  if (f.target != target) throw InternalError("factorization built for the wrong target");
  VerificationReport rep = verify_factorization(f);
  if (!rep.passed) throw InternalError("factorization failed verification: " + rep.detail);
  return f;
}

}  // namespace

Factorization factor_row_matrix(const DressElement& p, const DressElement& q) {
  const Mat2 target = Mat2::row(p, q);
  if (auto f = factor_trivial(p, q)) return checked(std::move(*f), target);

  std::vector<DressElement> row{p, q};
  auto [gamma, nums] = common_denominator(row);
  const Polynomial& x = nums[0];
  const Polynomial& y = nums[1];
  if (hypothesis_holds(x, y)) return checked(factor_definite(x, y, gamma), target);
  if (hypothesis_holds(y, x)) return checked(swap_factorization(factor_definite(y, x, gamma)), target);
  if (small_shape(x, y)) return checked(factor_small_impl(x, y, gamma), target);
  throw HypothesisNotMet(sign_at_roots(y, x), sign_at_roots(x, y), x.degree(), y.degree(), gcd(x, y).degree());
}

Factorization factor_small(const DressElement& p, const DressElement& q) {
  const Mat2 target = Mat2::row(p, q);
  std::vector<DressElement> row{p, q};
  auto [gamma, nums] = common_denominator(row);
  if (!small_shape(nums[0], nums[1])) {
    throw ShapeError("factor_small: numerators need degree <= 1, or degree <= 2 with a common factor");
  }
  return checked(factor_small_impl(nums[0], nums[1], gamma), target);
}

StableRangeEvidence stable_range_witness_check(const DressElement& z) {
  const Polynomial X = Polynomial::x();
  const Polynomial g = one_plus_x2();
  DressElement a = element(X, g);
  DressElement b = element(X * X - Polynomial(1), g);

  StableRangeEvidence ev;
  ev.pair_is_comaximal = is_unit(a * a + b * b);
  // The reduced denominator is monic and root-free, hence positive.
  const Polynomial& f = z.value().num();
  const Polynomial& dz = z.value().den();
  ev.f1 = X * dz + (X * X - Polynomial(1)) * f;
  ev.sign_at_one = ev.f1.sign_at(1);
  ev.sign_at_minus_one = ev.f1.sign_at(-1);
  ev.non_unit = ev.sign_at_one > 0 && ev.sign_at_minus_one < 0 && !is_unit(a + b * z);
  return ev;
}

}  // namespace dress

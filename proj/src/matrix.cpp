#include "dress/matrix.hpp"

namespace dress {

Mat2 Mat2::from(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                const RationalFunction& d) {
  return {DressElement::from(a), DressElement::from(b), DressElement::from(c), DressElement::from(d)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.a.value()) + ", " + to_string(m.b.value()) + "], [" + to_string(m.c.value()) + ", " +
         to_string(m.d.value()) + "]]";
}

bool is_idempotent(const Mat2& m) { return m * m == m; }

std::optional<Mat2> complete_idempotent_pair(const DressElement& p, const DressElement& q) {
  if (q.is_zero()) throw DivisionByZero("complete_idempotent_pair: q is zero");
  DressElement one_minus_p = DressElement(1) - p;
  auto r = DressElement::try_from((p * one_minus_p).value() / q.value());
  if (!r) return std::nullopt;
  Mat2 m{p, q, *r, one_minus_p};
  if (!is_idempotent(m)) throw InternalError("complete_idempotent_pair: result not idempotent");
  return m;
}

Mat2 shear(const DressElement& u) { return {1, u, 0, 1}; }

Mat2 swap_matrix() { return {0, 1, 1, 0}; }

Mat2 inverse(const Mat2& p) {
  DressElement det = p.determinant();
  if (!is_unit(det)) throw NotInvertible();
  DressElement inv = DressElement::from(det.value().inverse());
  return {inv * p.d, -(inv * p.b), -(inv * p.c), inv * p.a};
}

Mat2 Factorization::product() const {
  Mat2 acc = Mat2::identity();
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

Factorization conjugate_factorization(const Factorization& f, const Mat2& p) {
  Mat2 p_inv = inverse(p);
  Factorization out{p_inv * f.target * p, {}};
  out.factors.reserve(f.factors.size());
  for (const auto& e : f.factors) out.factors.push_back(p_inv * e * p);
  return out;
}

Factorization swap_factorization(const Factorization& f) {
  if (!f.target.has_zero_second_row()) throw ShapeError("swap_factorization: target must have a zero second row");
  Factorization s = conjugate_factorization(f, swap_matrix());  // target (0 0; q p)
  Factorization out{Mat2::row(f.target.b, f.target.a), {Mat2{1, 1, 0, 0}}};
  out.factors.insert(out.factors.end(), s.factors.begin(), s.factors.end());
  return out;
}

namespace {

bool entries_in_ring(const Mat2& m) {
  return is_member(m.a.value()) && is_member(m.b.value()) && is_member(m.c.value()) && is_member(m.d.value());
}

}  // namespace

VerificationReport verify_factorization(const Factorization& f) {
  VerificationReport rep;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (!entries_in_ring(f.factors[i])) {
      return {false, VerificationFailure::EntryNotInRing, i, "factor " + std::to_string(i) + " has an entry outside D"};
    }
  }
  if (!entries_in_ring(f.target)) {
    return {false, VerificationFailure::EntryNotInRing, f.factors.size(), "target has an entry outside D"};
  }
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (!is_idempotent(f.factors[i])) {
      return {false, VerificationFailure::NotIdempotent, i, "factor " + std::to_string(i) + " is not idempotent"};
    }
  }
  if (f.product() != f.target) {
    return {false, VerificationFailure::ProductMismatch, f.factors.size(), "product of factors differs from target"};
  }
  return rep;
}

}  // namespace dress

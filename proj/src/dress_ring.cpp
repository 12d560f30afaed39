#include "dress/dress_ring.hpp"

#include <string>

#include "dress/real_roots.hpp"

namespace dress {

std::string_view to_string(MembershipFailure f) {
  switch (f) {
    case MembershipFailure::DenominatorHasRealRoots: return "denominator has real roots";
    case MembershipFailure::PositiveDegree: return "degree is positive";
  }
  return "?";
}

NotInRing::NotInRing(const RationalFunction& value, MembershipFailure reason)
    : Error("not in D: " + to_string(value) + " (" + std::string(dress::to_string(reason)) + ")"),
      reason_(reason) {}

std::optional<MembershipFailure> membership_failure(const RationalFunction& r) {
  if (r.is_zero()) return std::nullopt;
  if (r.num().degree() > r.den().degree()) return MembershipFailure::PositiveDegree;
  if (!is_gamma(r.den())) return MembershipFailure::DenominatorHasRealRoots;
  return std::nullopt;
}

bool is_member(const RationalFunction& r) { return !membership_failure(r).has_value(); }

DressElement DressElement::from(const RationalFunction& r) {
  if (auto f = membership_failure(r)) throw NotInRing(r, *f);
  return DressElement(r);
}

std::optional<DressElement> DressElement::try_from(const RationalFunction& r) {
  if (membership_failure(r)) return std::nullopt;
  return DressElement(r);
}

bool is_unit(const RationalFunction& r) {
  if (r.is_zero()) return false;
  return r.num().degree() == r.den().degree() && is_gamma(r.num()) && is_gamma(r.den());
}

bool divides(const DressElement& a, const DressElement& b) {
  if (a.is_zero()) throw DivisionByZero("divides: divisor is zero");
  return is_member(b.value() / a.value());
}

bool associates(const DressElement& a, const DressElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return is_unit(a.value() / b.value());
}

CommonDenominator common_denominator(std::span<const DressElement> elements) {
  CommonDenominator out{Polynomial(1), {}};
  for (const auto& e : elements) out.denominator = lcm(out.denominator, e.value().den());
  for (const auto& e : elements) {
    out.numerators.push_back(e.value().num() * exact_quotient(out.denominator, e.value().den()));
  }
  return out;
}

NumeratorClasses classify_numerator(const DressElement& a) {
  if (a.is_zero()) throw InvalidArgument("classify_numerator: zero element");
  const Polynomial& num = a.value().num();
  NumeratorClasses out{num.leading(), {}, {}, {}};
  for (const auto& [piece, mult] : squarefree_decomposition(num)) {
    Polynomial rest = piece;
    for (const auto& iv : isolate_real_roots(piece)) {
      if (!iv.exact) continue;
      Polynomial lin(std::vector<Rational>{-*iv.exact, 1});
      out.real_rooted.push_back({lin, mult});
      rest = exact_quotient(rest, lin);
    }
    if (rest.is_constant()) continue;
    std::size_t roots = sturm_count(rest);
    rest = rest.monic();
    if (roots == 0) {
      out.root_free.push_back({rest, mult});
    } else if (Degree(static_cast<int>(roots)) == rest.degree()) {
      out.real_rooted.push_back({rest, mult});
    } else {
      out.mixed.push_back({rest, mult});
    }
  }
  return out;
}

}  // namespace dress

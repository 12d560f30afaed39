#include "dress/ideals.hpp"

#include <algorithm>

#include "dress/real_roots.hpp"

namespace dress {

IdealGens::IdealGens(std::vector<DressElement> gens) : gens_(std::move(gens)) {
  if (std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_zero(); })) throw ZeroIdeal();
}

DressElement ideal_square(const IdealGens& J) {
  auto [gamma, nums] = common_denominator(J.gens());
  Polynomial M;
  for (const auto& f : nums) M = gcd(M, f);

  // With M removed the numerators have no common real root, so the sum of
  // their squares is root-free and has the maximal degree among them.
  Polynomial g;
  for (const auto& f : nums) {
    Polynomial reduced = exact_quotient(f, M);
    g += reduced * reduced;
  }
  if (!is_gamma(g)) throw InternalError("ideal_square: reduced sum of squares has a real root");
  DressElement s = DressElement::from(RationalFunction::normalize(M * M * g, gamma * gamma));

  const auto& r = J.gens();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i; j < r.size(); ++j) {
      if (!is_member((r[i] * r[j]).value() / s.value())) {
        throw InternalError("ideal_square: r_i r_j / s left D");
      }
    }
  }
  return s;
}

PrincipalityReport analyze_principality(const DressElement& a, const DressElement& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroIdeal();
  std::vector<DressElement> pair{a, b};
  auto [gamma, nums] = common_denominator(pair);
  const Polynomial& f = nums[0];
  const Polynomial& g = nums[1];

  PrincipalityReport rep;
  rep.denominator = gamma;
  rep.gcd_part = gcd(f, g);
  rep.fprime = exact_quotient(f, rep.gcd_part);
  rep.gprime = exact_quotient(g, rep.gcd_part);
  rep.s = max(rep.fprime.degree(), rep.gprime.degree()).value();
  rep.principal = rep.s % 2 == 0;
  if (!rep.principal) return rep;

  // h = (1 + X^2)^{s/2} is root-free of degree s, so f'/h and g'/h lie in D
  // and u = (f'^2 + g'^2)/h^2 is a unit.
  Polynomial h = Polynomial(std::vector<Rational>{1, 0, 1}).pow(static_cast<unsigned>(rep.s / 2));
  Polynomial sum_sq = rep.fprime * rep.fprime + rep.gprime * rep.gprime;
  RationalFunction u = RationalFunction::normalize(sum_sq, h * h);
  if (!is_unit(u)) throw InternalError("principal_generator: (f'^2 + g'^2)/h^2 is not a unit");

  DressElement gen = DressElement::from(RationalFunction::normalize(rep.gcd_part * h, gamma));
  // h = u^{-1}(f'/h) f' + u^{-1}(g'/h) g'; scaling by M/gamma expresses the
  // generator through a = M f'/gamma and b = M g'/gamma.
  DressElement lambda = DressElement::from(RationalFunction::normalize(h * rep.fprime, sum_sq));
  DressElement mu = DressElement::from(RationalFunction::normalize(h * rep.gprime, sum_sq));

  if (!divides(gen, a) || !divides(gen, b)) throw InternalError("principal_generator: generator does not divide");
  if (lambda * a + mu * b != gen) throw InternalError("principal_generator: expansion identity failed");

  rep.generator = gen;
  rep.expansion = std::make_pair(lambda, mu);
  return rep;
}

bool is_principal(const DressElement& a, const DressElement& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroIdeal();
  std::vector<DressElement> pair{a, b};
  auto [gamma, nums] = common_denominator(pair);
  Polynomial m = gcd(nums[0], nums[1]);
  return max(exact_quotient(nums[0], m).degree(), exact_quotient(nums[1], m).degree()).value() % 2 == 0;
}

std::optional<PrincipalityReport> principal_generator(const DressElement& a, const DressElement& b) {
  auto rep = analyze_principality(a, b);
  if (!rep.principal) return std::nullopt;
  return rep;
}

IdealInverse ideal_inverse(const DressElement& a, const DressElement& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroIdeal();
  DressElement s = a * a + b * b;
  IdealInverse inv{a.value() / s.value(), b.value() / s.value(), s};
  for (const auto& prod : {a.value() * inv.first, a.value() * inv.second, b.value() * inv.second}) {
    if (!is_member(prod)) throw InternalError("ideal_inverse: product left D");
  }
  if (a.value() * inv.first + b.value() * inv.second != RationalFunction(1)) {
    throw InternalError("ideal_inverse: witness does not sum to 1");
  }
  return inv;
}

}  // namespace dress

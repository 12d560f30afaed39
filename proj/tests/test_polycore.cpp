#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dress/errors.hpp"
#include "dress/polynomial.hpp"
#include "dress/rational_function.hpp"
#include "dress/real_roots.hpp"
#include "test_support.hpp"

using namespace dress;
using testing_support::Gen;

namespace {

const Polynomial X = Polynomial::x();

Polynomial P(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Rational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_SUITE("degree") {
  TEST_CASE("zero polynomial has the -inf sentinel") {
    CHECK_FALSE(Polynomial().degree().is_finite());
    CHECK(Polynomial().degree() == Degree::neg_inf());
    CHECK(Polynomial().degree() < Degree(0));
    CHECK_THROWS_AS((void)Polynomial().degree().value(), Error);
  }
  TEST_CASE("sentinel absorbs addition") {
    CHECK((Degree::neg_inf() + Degree(3)) == Degree::neg_inf());
    CHECK((Degree(2) + Degree(3)) == Degree(5));
    CHECK(to_string(Degree::neg_inf()) == "-inf");
  }
}

TEST_SUITE("polynomial arithmetic") {
  TEST_CASE("gcd of X^2-1 and X^2-X is X-1") {
    CHECK(gcd(X * X - 1, X * X - X) == X - 1);
  }
  TEST_CASE("divrem of X^3 by X^2+1") {
    auto [q, r] = divrem(X.pow(3), X * X + 1);
    CHECK(q == X);
    CHECK(r == -X);
  }
  TEST_CASE("product of X+1 and X-1") { CHECK((X + 1) * (X - 1) == X * X - 1); }
  TEST_CASE("division by the zero polynomial throws") {
    CHECK_THROWS_AS(divrem(X, Polynomial()), DivisionByZero);
  }
  TEST_CASE("gcd is monic") {
    CHECK(gcd(2 * X * X - 2, 4 * X - 4) == X - 1);
    CHECK(gcd(Polynomial(3), Polynomial(5)) == Polynomial(1));
  }
  TEST_CASE("canonical printing") {
    CHECK(to_string(X * X - Q(1, 2) * X + 3) == "X^2 - (1/2)*X + 3");
    CHECK(to_string(-X) == "-X");
    CHECK(to_string(Polynomial()) == "0");
    CHECK(to_string(Polynomial(Q(-3, 4))) == "-(3/4)");
  }
  TEST_CASE("squarefree decomposition of X^3 (X+1)^2") {
    auto parts = squarefree_decomposition(X.pow(3) * (X + 1).pow(2));
    Polynomial rebuilt(1);
    for (const auto& f : parts) rebuilt = rebuilt * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    CHECK(rebuilt == X.pow(3) * (X + 1).pow(2));
    CHECK(squarefree_part(X.pow(3) * (X + 1).pow(2)) == X * (X + 1));
  }

  TEST_CASE("property: divrem reconstruction on 200 random pairs") {
    Gen g(1001);
    for (int i = 0; i < 200; ++i) {
      Polynomial a = g.poly(g.integer(0, 7));
      Polynomial b = g.nonzero_poly(g.integer(0, 5));
      auto [q, r] = divrem(a, b);
      CHECK(a == q * b + r);
      CHECK(r.degree() < b.degree());
    }
  }
  TEST_CASE("property: gcd divides both and equals the planted common factor") {
    Gen g(1002);
    for (int i = 0; i < 100; ++i) {
      Polynomial common = g.nonzero_poly(2).monic();
      Polynomial a = common * g.nonzero_poly(3);
      Polynomial b = common * g.nonzero_poly(3);
      Polynomial d = gcd(a, b);
      CHECK(divrem(a, d).remainder.is_zero());
      CHECK(divrem(b, d).remainder.is_zero());
      CHECK(divrem(d, common).remainder.is_zero());
    }
  }
}

TEST_SUITE("rational functions") {
  TEST_CASE("normalize cancels and makes the denominator monic") {
    RationalFunction r = RationalFunction::normalize(X * X - 1, 2 * X - 2);
    CHECK(r.num() == Q(1, 2) * X + Q(1, 2));
    CHECK(r.den() == Polynomial(1));
  }
  TEST_CASE("X/X is one") {
    RationalFunction r = RationalFunction::normalize(X, X);
    CHECK(r.num() == Polynomial(1));
    CHECK(r.den() == Polynomial(1));
  }
  TEST_CASE("zero over X^2+1 is 0/1") {
    RationalFunction r = RationalFunction::normalize(Polynomial(), X * X + 1);
    CHECK(r.num().is_zero());
    CHECK(r.den() == Polynomial(1));
  }
  TEST_CASE("zero denominator throws") {
    CHECK_THROWS_AS(RationalFunction::normalize(X, Polynomial()), DivisionByZero);
  }
  TEST_CASE("degree of rational functions") {
    CHECK(rf_degree(RationalFunction::normalize(X, X * X + 1)) == Degree(-1));
    CHECK(rf_degree(RationalFunction::normalize(X * X + 3, X * X + 1)) == Degree(0));
    CHECK(rf_degree(RationalFunction()) == Degree::neg_inf());
  }
  TEST_CASE("normalization is idempotent") {
    Gen g(1003);
    for (int i = 0; i < 100; ++i) {
      RationalFunction r = g.rational_function();
      RationalFunction again = RationalFunction::normalize(r.num(), r.den());
      CHECK(again == r);
      CHECK(r.den().leading() == 1);
      CHECK(gcd(r.num(), r.den()).degree() <= Degree(0));
    }
  }
  TEST_CASE("affine substitution examples") {
    CHECK(affine_substitute(X * X, 1, 1) == RationalFunction(X * X + 2 * X + 1));
    RationalFunction r = RationalFunction::normalize(X, X * X + 1);
    CHECK(affine_substitute(r, 1, 0) == r);
    CHECK(affine_substitute(X - 3, 2, 3) == RationalFunction(2 * X));
    CHECK_THROWS_AS(affine_substitute(r, 0, 1), InvalidArgument);
  }
  TEST_CASE("property: affine substitution is a degree-preserving ring map") {
    Gen g(1004);
    for (int i = 0; i < 100; ++i) {
      RationalFunction a = g.rational_function(3);
      RationalFunction b = g.rational_function(3);
      Rational s = g.nonzero_rational(3, 3);
      Rational t = g.rational(3, 3);
      CHECK(affine_substitute(a * b, s, t) == affine_substitute(a, s, t) * affine_substitute(b, s, t));
      CHECK(affine_substitute(a + b, s, t) == affine_substitute(a, s, t) + affine_substitute(b, s, t));
      CHECK(rf_degree(affine_substitute(a, s, t)) == rf_degree(a));
      RationalFunction sub = affine_substitute(a, s, t);
      CHECK(is_gamma(sub.num()) == is_gamma(a.num()));
      CHECK(is_gamma(sub.den()) == is_gamma(a.den()));
    }
  }
}

TEST_SUITE("real roots") {
  TEST_CASE("sturm counts") {
    CHECK(sturm_count(X * X + 1) == 0);
    CHECK(sturm_count(X * X - 2, Q(0), Q(2)) == 1);
    Polynomial cubic = (X - 1) * (X - 2) * (X - 3);
    int oracle = testing_support::grid_root_count(cubic, 10);
    REQUIRE(oracle == 3);
    CHECK(sturm_count(cubic) == static_cast<std::size_t>(oracle));
  }
  TEST_CASE("half-open interval convention") {
    Polynomial p = X * (X - 1);
    CHECK(sturm_count(p, Q(0), Q(1)) == 1);  // (0, 1] holds 1 only
    CHECK(sturm_count(p, Q(-1), Q(0)) == 1);
    CHECK(sturm_count(X.pow(3) * (X - 1).pow(2)) == 2);
  }
  TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(sturm_count(Polynomial()), ZeroPolynomial);
    CHECK_THROWS_AS(isolate_real_roots(Polynomial()), ZeroPolynomial);
    CHECK_THROWS_AS(sign_at_roots(X, Polynomial()), ZeroPolynomial);
  }
  TEST_CASE("isolation") {
    CHECK(isolate_real_roots(X * X + 1).empty());
    auto two = isolate_real_roots(X * X - 2);
    REQUIRE(two.size() == 2);
    for (const auto& iv : two) {
      CHECK_FALSE(iv.exact.has_value());
      CHECK(iv.lo < iv.hi);
      CHECK(sturm_count(X * X - 2, iv.lo, iv.hi) == 1);
      // Independent check: a sign change across the interval.
      CHECK(sgn((X * X - 2)(iv.lo)) * sgn((X * X - 2)(iv.hi)) < 0);
    }
    CHECK(two[0].hi <= two[1].lo);
    auto exact = isolate_real_roots(X * (X - 1));
    REQUIRE(exact.size() == 2);
    CHECK(exact[0].exact == Q(0));
    CHECK(exact[1].exact == Q(1));
  }
  TEST_CASE("sign at roots") {
    CHECK(sign_at_roots(X + 1, X * X - X) == SignPattern::AllPositive);
    CHECK(sign_at_roots(X, X * X - 1) == SignPattern::Mixed);
    CHECK(sign_at_roots(X, X) == SignPattern::HasZero);
    CHECK(sign_at_roots(X, X * X + 1) == SignPattern::NoRoots);
    CHECK(sign_at_roots(X - 2, X * X - 2) == SignPattern::AllNegative);
  }
  TEST_CASE("gamma predicates") {
    CHECK(is_gamma(X * X + 1));
    CHECK(is_gamma(Polynomial(5)));
    CHECK_FALSE(is_gamma(X * X - 1));
    CHECK_FALSE(is_gamma(Polynomial()));
    // Discriminant oracle for X^2+X+1.
    Rational disc = Rational(1 * 1 - 4 * 1 * 1);
    REQUIRE(disc < 0);
    CHECK(is_gamma_plus(X * X + X + 1));
    CHECK_FALSE(is_gamma_plus(-(X * X + 1)));
    CHECK_FALSE(is_gamma_plus(X * X - 1));
  }

  TEST_CASE("property: sturm soundness on planted roots") {
    Gen g(2001);
    for (int i = 0; i < 100; ++i) {
      std::set<int> roots;
      int k = g.integer(0, 5);
      while (static_cast<int>(roots.size()) < k) roots.insert(g.integer(-10, 10));
      Polynomial p = g.gamma_poly(g.integer(0, 2));
      for (int r : roots) p = p * (X - r).pow(static_cast<unsigned>(g.integer(1, 2)));
      CHECK(sturm_count(p) == roots.size());
      CHECK(isolate_real_roots(p).size() == roots.size());
    }
  }
  TEST_CASE("property: gamma certified values have even degree") {
    Gen g(2002);
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
      Polynomial p = g.nonzero_poly(g.integer(0, 6), 5);
      if (is_gamma(p)) {
        ++seen;
        CHECK(p.degree().value() % 2 == 0);
      }
    }
    CHECK(seen > 0);
  }
  TEST_CASE("property: gamma-plus is positive on a rational sample") {
    Gen g(2003);
    for (int i = 0; i < 50; ++i) {
      Polynomial p = g.gamma_poly(g.integer(0, 3));
      REQUIRE(is_gamma_plus(p));
      for (int j = 0; j < 50; ++j) {
        Rational t = make_rational(g.integer(-10000, 10000), 100);
        CHECK(p(t) > 0);
      }
    }
  }
  TEST_CASE("property: HasZero iff the gcd has a real root") {
    Gen g(2004);
    for (int i = 0; i < 150; ++i) {
      Polynomial shared = g.coin() ? X - g.integer(-3, 3) : Polynomial(1);
      Polynomial p = shared * g.nonzero_poly(2, 4);
      Polynomial q = (g.coin() ? shared : Polynomial(1)) * g.nonzero_poly(2, 4);
      bool has_zero = sign_at_roots(q, p) == SignPattern::HasZero;
      CHECK(has_zero == (sturm_count(gcd(p, q)) > 0));
    }
  }
  TEST_CASE("property: sign at roots agrees with direct evaluation at planted roots") {
    Gen g(2005);
    for (int i = 0; i < 100; ++i) {
      std::set<int> roots;
      int k = g.integer(1, 4);
      while (static_cast<int>(roots.size()) < k) roots.insert(g.integer(-6, 6));
      Polynomial p = g.gamma_poly(g.integer(0, 1));
      for (int r : roots) p = p * (X - r);
      Polynomial q = g.nonzero_poly(3, 5);
      std::set<int> signs;
      for (int r : roots) signs.insert(sgn(q(Rational(r))));
      SignPattern expected = signs.count(0) != 0 ? SignPattern::HasZero
                             : signs.size() > 1  ? SignPattern::Mixed
                             : *signs.begin() > 0 ? SignPattern::AllPositive
                                                  : SignPattern::AllNegative;
      CHECK(sign_at_roots(q, p) == expected);
    }
  }
  TEST_CASE("irrational roots are resolved by refinement") {
    // q = X - 1.4142 separates the roots of X^2 - 2 only after refinement.
    Polynomial q = X - Q(14142, 10000);
    CHECK(sign_at_roots(q, X * X - 2) == SignPattern::Mixed);
    CHECK(sign_at_roots(q * (X + Q(14142, 10000)), X * X - 2) == SignPattern::AllPositive);
  }
}

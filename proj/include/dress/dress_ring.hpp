#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dress/errors.hpp"
#include "dress/rational_function.hpp"

namespace dress {

// Elements of the minimal Dress ring D of R(X), restricted to Q(X): reduced
// f/g with g free of real roots and deg f <= deg g. Deciding on the reduced
// form is sound because any common factor of an unreduced f/g with g root-free
// is itself root-free and lowers both degrees by the same amount.

enum class MembershipFailure { DenominatorHasRealRoots, PositiveDegree };

std::string_view to_string(MembershipFailure f);

class NotInRing : public Error {
 public:
  NotInRing(const RationalFunction& value, MembershipFailure reason);
  MembershipFailure reason() const { return reason_; }

 private:
  MembershipFailure reason_;
};

/// First violated membership condition, or nullopt for members.
std::optional<MembershipFailure> membership_failure(const RationalFunction& r);
bool is_member(const RationalFunction& r);

class DressElement {
 public:
  DressElement() = default;
  DressElement(int c) : value_(c), degree_(value_.degree()) {}  // NOLINT: Z embeds in D
  DressElement(const Rational& c) : value_(c), degree_(value_.degree()) {}  // NOLINT

  /// Checked construction; throws NotInRing naming the failed condition.
  static DressElement from(const RationalFunction& r);
  static std::optional<DressElement> try_from(const RationalFunction& r);

  const RationalFunction& value() const { return value_; }
  Degree degree() const { return degree_; }
  bool is_zero() const { return value_.is_zero(); }
  /// Always true for a constructed element; kept as the membership witness.
  bool denominator_in_gamma() const { return true; }

  // D is a ring, so these stay inside it without re-checking.
  DressElement operator-() const { return DressElement(-value_); }
  friend DressElement operator+(const DressElement& a, const DressElement& b) { return DressElement(a.value_ + b.value_); }
  friend DressElement operator-(const DressElement& a, const DressElement& b) { return DressElement(a.value_ - b.value_); }
  friend DressElement operator*(const DressElement& a, const DressElement& b) { return DressElement(a.value_ * b.value_); }
  friend bool operator==(const DressElement& a, const DressElement& b) { return a.value_ == b.value_; }

 private:
  explicit DressElement(RationalFunction r) : value_(std::move(r)), degree_(value_.degree()) {}

  RationalFunction value_;
  Degree degree_;
};

/// Units of D: ratios of root-free polynomials of equal degree.
bool is_unit(const RationalFunction& r);
inline bool is_unit(const DressElement& a) { return is_unit(a.value()); }

/// b / a lies in D. Throws DivisionByZero for a = 0.
bool divides(const DressElement& a, const DressElement& b);
bool associates(const DressElement& a, const DressElement& b);

/// Elements over one monic common denominator (the lcm of the reduced
/// denominators): elements[i] = numerators[i] / denominator.
struct CommonDenominator {
  Polynomial denominator;
  std::vector<Polynomial> numerators;
};
CommonDenominator common_denominator(std::span<const DressElement> elements);

struct NumeratorFactor {
  Polynomial factor;  // monic
  int multiplicity;
};

/// Split of a numerator into pieces certified by Sturm counts: real_rooted
/// pieces have only real roots, root_free pieces none, mixed pieces both.
/// Rational linear factors are split off first; the remaining cofactors are
/// not factored further over Q, so a mixed piece may hide a root-free factor.
struct NumeratorClasses {
  Rational content;
  std::vector<NumeratorFactor> real_rooted;
  std::vector<NumeratorFactor> root_free;
  std::vector<NumeratorFactor> mixed;
};

/// Throws InvalidArgument for zero.
NumeratorClasses classify_numerator(const DressElement& a);

}  // namespace dress

#pragma once

#include <compare>
#include <string>

namespace dress {

/// Degree of a polynomial or rational function. The zero element has the
/// distinct degree -infinity, which compares below every finite degree and
/// absorbs addition.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(int value) : finite_(true), value_(value) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  int value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, int b) { return a <=> Degree(b); }

  /// -inf + d = -inf.
  friend Degree operator+(Degree a, Degree b);
  /// -inf - finite = -inf; subtracting -inf is undefined and throws.
  friend Degree operator-(Degree a, Degree b);

  std::string to_string() const;

 private:
  bool finite_ = false;
  int value_ = 0;
};

inline Degree max(Degree a, Degree b) { return a < b ? b : a; }
inline std::string to_string(Degree d) { return d.to_string(); }

}  // namespace dress

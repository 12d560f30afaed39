#pragma once

#include <optional>
#include <vector>

#include "dress/errors.hpp"
#include "dress/rational.hpp"

namespace dress {

/// Residue setting of the Laurent field: R((X)) (residue field R) or
/// Q((X)) (residue field Q). Coefficients are rational in both cases.
enum class LaurentBase { RealHenselian, RationalHenselian };

/// Laurent series known modulo X^precision: coeffs()[i] is the coefficient of
/// X^(order + i) for order + i < precision. A series can be the exact zero,
/// or merely vanish up to its precision, in which case its order is unknown.
class TruncLaurent {
 public:
  /// Leading zero coefficients are absorbed into the order. Throws
  /// InvalidArgument when coefficients reach past the precision.
  TruncLaurent(int order, std::vector<Rational> coeffs, int precision, LaurentBase base);
  static TruncLaurent zero(LaurentBase base);

  int order() const { return order_; }
  int precision() const { return precision_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  LaurentBase base() const { return base_; }
  bool is_exact_zero() const { return exact_zero_; }
  bool vanishes_to_precision() const { return !exact_zero_ && coeffs_.empty(); }
  /// Coefficient of X^k for k < precision.
  Rational coeff(int k) const;

  friend TruncLaurent operator+(const TruncLaurent& a, const TruncLaurent& b);
  friend TruncLaurent operator-(const TruncLaurent& a, const TruncLaurent& b);
  friend TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b);
  TruncLaurent operator-() const;

 private:
  TruncLaurent() = default;

  int order_ = 0;
  std::vector<Rational> coeffs_;
  int precision_ = 0;
  LaurentBase base_ = LaurentBase::RealHenselian;
  bool exact_zero_ = false;
};

class IndeterminateSeries : public Error {
 public:
  IndeterminateSeries() : Error("series vanishes to its precision; membership is undetermined") {}
};

/// Real base: order >= 0 (the valuation ring). Rational base: order > 0, or
/// order 0 with constant term in Z_S. Throws IndeterminateSeries for a series
/// that vanishes to precision without being the exact zero.
bool laurent_member(const TruncLaurent& s);

}  // namespace dress

#include "dress/laurent.hpp"

#include <algorithm>
#include <limits>

#include "dress/number_rings.hpp"

namespace dress {

TruncLaurent::TruncLaurent(int order, std::vector<Rational> coeffs, int precision, LaurentBase base)
    : order_(order), coeffs_(std::move(coeffs)), precision_(precision), base_(base) {
  if (static_cast<long>(order) + static_cast<long>(coeffs_.size()) > precision) {
    throw InvalidArgument("Laurent coefficients reach past the precision");
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  order_ += static_cast<int>(lead);
  if (coeffs_.empty()) order_ = precision_;
  // Unlisted coefficients below the precision are zero; store them explicitly.
  coeffs_.resize(static_cast<std::size_t>(precision_ - order_));
}

TruncLaurent TruncLaurent::zero(LaurentBase base) {
  TruncLaurent z;
  z.base_ = base;
  z.exact_zero_ = true;
  z.order_ = std::numeric_limits<int>::max();
  z.precision_ = std::numeric_limits<int>::max();
  return z;
}

Rational TruncLaurent::coeff(int k) const {
  if (k >= precision_) throw InvalidArgument("coefficient beyond the known precision");
  if (exact_zero_ || k < order_) return 0;
  return coeffs_[static_cast<std::size_t>(k - order_)];
}

namespace {

void require_same_base(const TruncLaurent& a, const TruncLaurent& b) {
  if (a.base() != b.base()) throw InvalidArgument("Laurent series over different bases");
}

}  // namespace

TruncLaurent TruncLaurent::operator-() const {
  if (exact_zero_) return *this;
  TruncLaurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncLaurent operator+(const TruncLaurent& a, const TruncLaurent& b) {
  require_same_base(a, b);
  if (a.exact_zero_) return b;
  if (b.exact_zero_) return a;
  const int prec = std::min(a.precision_, b.precision_);
  const int lo = std::min({a.order_, b.order_, prec});
  std::vector<Rational> c;
  for (int k = lo; k < prec; ++k) c.push_back(a.coeff(k) + b.coeff(k));
  return TruncLaurent(lo, std::move(c), prec, a.base_);
}

TruncLaurent operator-(const TruncLaurent& a, const TruncLaurent& b) { return a + (-b); }

TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b) {
  require_same_base(a, b);
  if (a.exact_zero_ || b.exact_zero_) return TruncLaurent::zero(a.base_);
  // Terms of the product are exact below min(pa + ob, pb + oa).
  const int prec = std::min(a.precision_ + b.order_, b.precision_ + a.order_);
  const int lo = std::min(a.order_ + b.order_, prec);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(prec - lo, 0)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncLaurent(lo, std::move(c), prec, a.base_);
}

bool laurent_member(const TruncLaurent& s) {
  if (s.is_exact_zero()) return true;
  if (s.vanishes_to_precision()) throw IndeterminateSeries();
  if (s.base() == LaurentBase::RealHenselian) return s.order() >= 0;
  if (s.order() > 0) return true;
  return s.order() == 0 && zs_member(s.coeffs().front());
}

}  // namespace dress

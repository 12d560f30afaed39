#include "dress/polynomial.hpp"

#include <algorithm>

#include "dress/errors.hpp"

namespace dress {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int Degree::value() const {
  if (!finite_) throw InvalidArgument("degree of the zero element is -inf");
  return value_;
}

Degree operator+(Degree a, Degree b) {
  if (!a.finite_ || !b.finite_) return Degree::neg_inf();
  return Degree(a.value_ + b.value_);
}

Degree operator-(Degree a, Degree b) {
  if (!b.finite_) throw InvalidArgument("subtracting degree -inf");
  if (!a.finite_) return Degree::neg_inf();
  return Degree(a.value_ - b.value_);
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw InvalidArgument("negative exponent in monomial");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  return is_zero() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the substituted variable.
  Polynomial lin(std::vector<Rational>{b, a});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  if (rem.size() <= db) return {Polynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  Rational inv_lc = 1 / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] * inv_lc;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * bc[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InvalidArgument("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a.monic();
  Polynomial v = b.monic();
  while (!v.is_zero()) {
    Polynomial r = divrem(u, v).remainder.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_quotient(a * b, gcd(a, b)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero");
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = exact_quotient(f, a);
  Polynomial c = exact_quotient(f.derivative(), a);
  Polynomial d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    Polynomial g = gcd(b, d);
    if (!g.is_constant()) out.push_back({g, i});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("primitive part of zero");
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

namespace {

std::string coefficient_text(const Rational& magnitude) {
  if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
  return "(" + magnitude.get_str() + ")";
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto cs = p.coeffs();
  bool first = true;
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += coefficient_text(mag);
      continue;
    }
    if (mag != 1) out += coefficient_text(mag) + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace dress

#include "dress/expression.hpp"

#include <cctype>

#include "dress/errors.hpp"

namespace dress {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpressionValue parse_input() {
    skip_ws();
    ExpressionValue v;
    if (peek() == '[') {
      v = parse_matrix();
    } else {
      v = parse_expr();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  RfMatrix parse_matrix() {
    RfMatrix m;
    expect('[');
    for (int row = 0; row < 2; ++row) {
      if (row == 1) expect(',');
      expect('[');
      m.entries[static_cast<std::size_t>(2 * row)] = parse_expr();
      expect(',');
      m.entries[static_cast<std::size_t>(2 * row + 1)] = parse_expr();
      expect(']');
    }
    expect(']');
    return m;
  }

  RationalFunction parse_expr() {
    RationalFunction acc = parse_term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      RationalFunction rhs = parse_term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  RationalFunction parse_term() {
    RationalFunction acc = parse_unary();
    while (true) {
      char c = peek();
      if (c != '*' && c != '/') return acc;
      std::size_t op = pos_++;
      RationalFunction rhs = parse_unary();
      if (c == '*') {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) throw EvaluationError(op, "division by zero");
        acc = acc / rhs;
      }
    }
  }

  RationalFunction parse_unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -parse_unary();
    }
    if (c == '+') {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  RationalFunction parse_power() {
    RationalFunction base = parse_primary();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
        fail("expected a nonnegative integer exponent");
      }
      std::size_t start = pos_;
      Integer e = parse_digits();
      if (e > kMaxExponent) throw ParseError(start, "exponent too large");
      base = base.pow(static_cast<int>(e.get_ui()));
    }
    return base;
  }

  RationalFunction parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction v = parse_expr();
      expect(')');
      return v;
    }
    if (c == 'X') {
      ++pos_;
      return Polynomial::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) return Rational(parse_digits());
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer parse_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) {
  Parser p(text);
  ExpressionValue v = p.parse_input();
  return {std::string(text), std::move(v)};
}

std::string to_string(const RfMatrix& m) {
  const auto& e = m.entries;
  return "[[" + to_string(e[0]) + ", " + to_string(e[1]) + "], [" + to_string(e[2]) + ", " + to_string(e[3]) + "]]";
}

std::string to_string(const ExpressionValue& v) {
  if (const auto* r = std::get_if<RationalFunction>(&v)) return to_string(*r);
  return to_string(std::get<RfMatrix>(v));
}

}  // namespace dress

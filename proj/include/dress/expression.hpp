#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "dress/errors.hpp"
#include "dress/rational_function.hpp"

namespace dress {

// Expression language:
//
//   input   := matrix | expr
//   matrix  := '[' '[' expr ',' expr ']' ',' '[' expr ',' expr ']' ']'
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)*
//   primary := integer | 'X' | '(' expr ')'
//
// Whitespace is ignored between tokens; binary operators associate left.

/// Matrix entries as parsed; membership in D is checked by the caller.
struct RfMatrix {
  std::array<RationalFunction, 4> entries;  // row-major
  friend bool operator==(const RfMatrix&, const RfMatrix&) = default;
};

using ExpressionValue = std::variant<RationalFunction, RfMatrix>;

struct Expression {
  std::string source;
  ExpressionValue value;

  bool is_matrix() const { return std::holds_alternative<RfMatrix>(value); }
};

/// Division by zero while evaluating; offset points at the operator.
class EvaluationError : public Error {
 public:
  EvaluationError(std::size_t offset, const std::string& what)
      : Error("evaluation error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Throws ParseError or EvaluationError.
Expression parse_expression(std::string_view text);

std::string to_string(const RfMatrix& m);
/// Canonical form of the parsed value; parsing it yields the same value.
std::string to_string(const ExpressionValue& v);

}  // namespace dress

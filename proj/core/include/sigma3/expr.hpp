#pragma once

// Recursive-descent parser for the polynomial expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := literal | ident | '(' expr ')' | '-' base
// Literals are integers or rationals written num/den. Identifiers are
// restricted to the declared variable universe.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sigma3/poly.hpp"

namespace sigma3 {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

struct ExprNode {
  enum class Kind { Literal, Var, Add, Sub, Mul, Neg, Pow };
  Kind kind;
  Rational literal;          // Literal
  std::string name;          // Var
  std::unique_ptr<ExprNode> lhs, rhs;
  unsigned exponent = 0;     // Pow
};

using ExprPtr = std::unique_ptr<ExprNode>;

// Parse the grammar; throws ParseError with a position on malformed input.
ExprPtr parse_expr(std::string_view text);

// Lower an AST to a polynomial; unknown identifiers throw ParseError
// (position of the offending identifier).
Poly to_poly(const ExprNode& ast, const VarTablePtr& vars);

inline Poly parse_poly(std::string_view text, const VarTablePtr& vars) {
  return to_poly(*parse_expr(text), vars);
}

}  // namespace sigma3

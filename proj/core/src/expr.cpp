#include "sigma3/expr.hpp"

#include <cctype>
#include <map>

namespace sigma3 {

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  ExprPtr make(ExprNode::Kind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
  }

  std::string read_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected number", pos);
    return std::string(s.substr(start, pos - start));
  }

  ExprPtr parse_literal() {
    std::string num = read_uint();
    // rational literal: NUM '/' NUM, with no other use of '/'
    size_t save = pos;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::string den = read_uint();
        auto n = make(ExprNode::Kind::Literal);
        n->literal = Rational::from_string(num + "/" + den);
        return n;
      }
      pos = save;  // lone '/': let the caller fail on it
    }
    auto n = make(ExprNode::Kind::Literal);
    n->literal = Rational::from_string(num);
    return n;
  }

  ExprPtr parse_base() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_expr_();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos;
      auto n = make(ExprNode::Kind::Neg);
      n->lhs = parse_base();
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      auto n = make(ExprNode::Kind::Var);
      n->name = std::string(s.substr(start, pos - start));
      // record position for semantic errors
      n->exponent = static_cast<unsigned>(start);
      return n;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_base();
    skip_ws();
    if (accept('^')) {
      std::string e = read_uint();
      auto n = make(ExprNode::Kind::Pow);
      n->lhs = std::move(base);
      try {
        n->exponent = static_cast<unsigned>(std::stoul(e));
      } catch (const std::exception&) {
        throw ParseError("exponent too large", pos);
      }
      return n;
    }
    return base;
  }

  ExprPtr parse_term() {
    ExprPtr acc = parse_factor();
    while (accept('*')) {
      auto n = make(ExprNode::Kind::Mul);
      n->lhs = std::move(acc);
      n->rhs = parse_factor();
      acc = std::move(n);
    }
    return acc;
  }

  ExprPtr parse_expr_() {
    ExprPtr acc = parse_term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        auto n = make(ExprNode::Kind::Add);
        n->lhs = std::move(acc);
        n->rhs = parse_term();
        acc = std::move(n);
      } else if (accept('-')) {
        auto n = make(ExprNode::Kind::Sub);
        n->lhs = std::move(acc);
        n->rhs = parse_term();
        acc = std::move(n);
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expr_();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return e;
}

Poly to_poly(const ExprNode& ast, const VarTablePtr& vars) {
  switch (ast.kind) {
    case ExprNode::Kind::Literal:
      return Poly::constant(vars, Scalar(ast.literal));
    case ExprNode::Kind::Var: {
      if (vars->index_of(ast.name) < 0)
        throw ParseError("unknown variable '" + ast.name + "'", ast.exponent);
      return Poly::variable(vars, ast.name);
    }
    case ExprNode::Kind::Add:
      return to_poly(*ast.lhs, vars) + to_poly(*ast.rhs, vars);
    case ExprNode::Kind::Sub:
      return to_poly(*ast.lhs, vars) - to_poly(*ast.rhs, vars);
    case ExprNode::Kind::Mul:
      return to_poly(*ast.lhs, vars) * to_poly(*ast.rhs, vars);
    case ExprNode::Kind::Neg:
      return -to_poly(*ast.lhs, vars);
    case ExprNode::Kind::Pow:
      return to_poly(*ast.lhs, vars).pow(ast.exponent);
  }
  throw std::logic_error("to_poly: bad node");
}

}  // namespace sigma3

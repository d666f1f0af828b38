#pragma once

// Scalar expressions in the variable t, used for coefficients, forcing
// terms and exact solutions in problem descriptions.
//
// Grammar (whitespace is insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' factor)?          right-associative
//   primary := number | 't' | name '(' expr ')' | '(' expr ')'
//   name    := 'gamma' | 'sqrt'
// Numbers are decimal with an optional exponent. Implicit multiplication
// ("2t") is rejected.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace hfm {

class Expr {
 public:
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Gamma, Sqrt };

  /// Constant zero.
  Expr();

  static Expr number(double value, std::size_t offset = 0);
  static Expr variable(std::size_t offset = 0);
  static Expr unary(Kind kind, Expr operand, std::size_t offset = 0);
  static Expr binary(Kind kind, Expr lhs, Expr rhs, std::size_t offset = 0);

  Kind kind() const noexcept;
  /// Byte offset of this node in the source it was parsed from.
  std::size_t offset() const noexcept;
  double value() const noexcept;  ///< Number nodes only.
  const Expr& lhs() const;        ///< First operand of unary and binary nodes.
  const Expr& rhs() const;        ///< Second operand of binary nodes.

  /// Throws EvalError when the result, or any subexpression, is not finite.
  double operator()(double t) const;

  /// Fully parenthesized text that parses back to the same tree.
  std::string to_string() const;

  /// Same tree shape, node kinds and literal values (offsets ignored).
  bool same_structure(const Expr& other) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Throws ParseError carrying the byte offset of the problem.
Expr parse(std::string_view src);

inline double eval(const Expr& e, double t) { return e(t); }

}  // namespace hfm

#pragma once

// A small expression language over the variable t:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 't' | 'e' | 'pi' | fname '(' expr ')' | '(' expr ')'
//
// '^' is right-associative and binds tighter than unary minus, so "-2^2" is
// -4 and "2^-3" is 1/8.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rf/partitions.hpp"

namespace rf::expr {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  std::size_t offset = 0;
};

/// Splits text into tokens; the last one is always End at offset text.size().
/// Throws ParseError on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

enum class Func { Sin, Cos, Tan, Sec, Csc, Cot, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Abs, Atan, Asin };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

std::string_view func_name(Func f) noexcept;

struct Node;

/// Immutable expression tree; copies share structure.
class Expr {
 public:
  static Expr constant(double value);
  static Expr var();
  static Expr neg(Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(Func f, Expr arg);

  const Node& node() const noexcept { return *node_; }

  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  enum class Kind { Constant, Var, Neg, Binary, Call };
  Kind kind;
  double value = 0.0;
  BinaryOp op = BinaryOp::Add;
  Func func = Func::Sin;
  std::vector<Expr> children;
};

Expr parse(std::string_view text);

/// Exp and log go through the constructive functions (eps 1e-14); integral
/// exponents up to 64 in magnitude are done by repeated multiplication.
/// Throws EvaluationError on a domain violation.
double eval_expr(const Expr& e, double t);

/// Canonical text with the fewest parentheses the grammar needs.
std::string to_string(const Expr& e);

/// The expression as a function of t.
RealFn to_function(Expr e);

}  // namespace rf::expr

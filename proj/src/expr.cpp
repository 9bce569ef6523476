#include "rf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "rf/elementary.hpp"
#include "rf/errors.hpp"
#include "rf/roots.hpp"

namespace rf::expr {

namespace {

constexpr double kConstructiveEps = 1e-14;
constexpr double kMaxRepeatedExponent = 64;

constexpr std::array<std::pair<std::string_view, Func>, 15> kFuncs{{
    {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan},   {"sec", Func::Sec},
    {"csc", Func::Csc},   {"cot", Func::Cot},   {"sinh", Func::Sinh}, {"cosh", Func::Cosh},
    {"tanh", Func::Tanh}, {"exp", Func::Exp},   {"log", Func::Log},   {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},   {"atan", Func::Atan}, {"asin", Func::Asin},
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

std::size_t scan_number(std::string_view s, std::size_t i) {
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    if (j < s.size() && is_digit(s[j])) {
      while (j < s.size() && is_digit(s[j])) ++j;
      i = j;
    }
  }
  return i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      const std::size_t end = scan_number(text, i);
      out.push_back({TokenKind::Number, std::string(text.substr(i, end - i)), i});
      i = end;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t end = i;
      while (end < text.size() && (is_alpha(text[end]) || is_digit(text[end]))) ++end;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, end - i)), i});
      i = end;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default: throw ParseError(i, "a number, identifier, operator or parenthesis");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

std::string_view func_name(Func f) noexcept {
  for (const auto& [name, fn] : kFuncs)
    if (fn == f) return name;
  return "?";
}

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{Node::Kind::Constant, value, {}, {}, {}}));
}

Expr Expr::var() { return Expr(std::make_shared<const Node>(Node{Node::Kind::Var, 0, {}, {}, {}})); }

Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{Node::Kind::Neg, 0, {}, {}, {std::move(operand)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(
      Node{Node::Kind::Binary, 0, op, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::call(Func f, Expr arg) {
  return Expr(std::make_shared<const Node>(Node{Node::Kind::Call, 0, {}, f, {std::move(arg)}}));
}

bool operator==(const Expr& lhs, const Expr& rhs) {
  const Node& a = lhs.node();
  const Node& b = rhs.node();
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Node::Kind::Constant: return a.value == b.value;
    case Node::Kind::Var: return true;
    case Node::Kind::Neg: return a.children[0] == b.children[0];
    case Node::Kind::Binary:
      return a.op == b.op && a.children[0] == b.children[0] && a.children[1] == b.children[1];
    case Node::Kind::Call: return a.func == b.func && a.children[0] == b.children[0];
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != TokenKind::End) throw ParseError(peek().offset, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(TokenKind kind, const char* what) {
    if (!accept(kind)) throw ParseError(peek().offset, what);
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept(TokenKind::Plus)) {
        lhs = Expr::binary(BinaryOp::Add, lhs, term());
      } else if (accept(TokenKind::Minus)) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept(TokenKind::Star)) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, unary());
      } else if (accept(TokenKind::Slash)) {
        lhs = Expr::binary(BinaryOp::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept(TokenKind::Minus)) return Expr::neg(unary());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept(TokenKind::Caret)) return Expr::binary(BinaryOp::Pow, base, unary());
    return base;
  }

  Expr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number: {
        next();
        double v = 0.0;
        const char* first = tok.lexeme.data();
        const char* last = first + tok.lexeme.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) throw ParseError(tok.offset, "a finite number");
        return Expr::constant(v);
      }
      case TokenKind::Ident: {
        next();
        if (tok.lexeme == "t") return Expr::var();
        if (tok.lexeme == "e") return Expr::constant(std::numbers::e);
        if (tok.lexeme == "pi") return Expr::constant(std::numbers::pi);
        for (const auto& [name, fn] : kFuncs) {
          if (tok.lexeme != name) continue;
          expect(TokenKind::LParen, "'('");
          Expr arg = expr();
          expect(TokenKind::RParen, "')'");
          return Expr::call(fn, arg);
        }
        throw ParseError(tok.offset, "t, e, pi or a function name (unknown identifier '" +
                                         tok.lexeme + "')");
      }
      case TokenKind::LParen: {
        next();
        Expr inner = expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default: throw ParseError(tok.offset, "expression");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

double checked(double v, double t, const char* what) {
  if (!std::isfinite(v)) throw EvaluationError(what, t);
  return v;
}

double eval_pow(double base, double x, double t) {
  if (x == std::trunc(x) && std::abs(x) <= kMaxRepeatedExponent) {
    const auto k = static_cast<unsigned>(std::abs(x));
    const double p = ipow(base, k);
    if (x >= 0) return checked(p, t, "power overflows");
    if (p == 0.0) throw EvaluationError("division by zero in negative power", t);
    return checked(1.0 / p, t, "power overflows");
  }
  if (base < 0.0) throw EvaluationError("negative base with non-integer exponent", t);
  if (base == 0.0) {
    if (x > 0.0) return 0.0;
    throw EvaluationError("zero base with non-positive exponent", t);
  }
  return checked(pow_construct(base, x, kConstructiveEps), t, "power overflows");
}

double eval_call(Func f, double x, double t) {
  switch (f) {
    case Func::Sin: return std::sin(x);
    case Func::Cos: return std::cos(x);
    case Func::Tan: return checked(std::tan(x), t, "tan is not finite");
    case Func::Sec: return checked(1.0 / std::cos(x), t, "sec is not finite");
    case Func::Csc: {
      const double s = std::sin(x);
      if (s == 0.0) throw EvaluationError("csc of a multiple of pi", t);
      return checked(1.0 / s, t, "csc is not finite");
    }
    case Func::Cot: {
      const double s = std::sin(x);
      if (s == 0.0) throw EvaluationError("cot of a multiple of pi", t);
      return checked(std::cos(x) / s, t, "cot is not finite");
    }
    case Func::Sinh: return checked(hyperbolic(Hyperbolic::Sinh, x), t, "sinh overflows");
    case Func::Cosh: return checked(hyperbolic(Hyperbolic::Cosh, x), t, "cosh overflows");
    case Func::Tanh: return hyperbolic(Hyperbolic::Tanh, x);
    case Func::Exp: return checked(exp_construct(x, kConstructiveEps), t, "exp overflows");
    case Func::Log:
      if (!(x > 0.0)) throw EvaluationError("log of a non-positive number", t);
      return log_construct(x, kConstructiveEps).value;
    case Func::Sqrt:
      if (x < 0.0) throw EvaluationError("sqrt of a negative number", t);
      return std::sqrt(x);
    case Func::Abs: return std::abs(x);
    case Func::Atan: return std::atan(x);
    case Func::Asin:
      if (!(std::abs(x) <= 1.0)) throw EvaluationError("asin outside [-1, 1]", t);
      return std::asin(x);
  }
  return 0.0;
}

double eval(const Node& n, double t) {
  switch (n.kind) {
    case Node::Kind::Constant: return n.value;
    case Node::Kind::Var: return t;
    case Node::Kind::Neg: return -eval(n.children[0].node(), t);
    case Node::Kind::Call: {
      const double x = eval(n.children[0].node(), t);
      if (!std::isfinite(x)) throw EvaluationError("non-finite argument", t);
      return eval_call(n.func, x, t);
    }
    case Node::Kind::Binary: {
      const double l = eval(n.children[0].node(), t);
      const double r = eval(n.children[1].node(), t);
      switch (n.op) {
        case BinaryOp::Add: return checked(l + r, t, "sum is not finite");
        case BinaryOp::Sub: return checked(l - r, t, "difference is not finite");
        case BinaryOp::Mul: return checked(l * r, t, "product is not finite");
        case BinaryOp::Div:
          if (r == 0.0) throw EvaluationError("division by zero", t);
          return checked(l / r, t, "quotient is not finite");
        case BinaryOp::Pow: return eval_pow(l, r, t);
      }
    }
  }
  return 0.0;
}

// Binding strength used by the printer; a child is parenthesized when it
// binds more loosely than its slot requires.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int prec(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Constant: return n.value < 0 || std::signbit(n.value) ? kUnary : kAtom;
    case Node::Kind::Var:
    case Node::Kind::Call: return kAtom;
    case Node::Kind::Neg: return kUnary;
    case Node::Kind::Binary:
      switch (n.op) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return kSum;
        case BinaryOp::Mul:
        case BinaryOp::Div: return kProduct;
        case BinaryOp::Pow: return kPower;
      }
  }
  return kAtom;
}

void print(const Expr& e, int need, std::string& out);

void print_constant(double v, std::string& out) {
  if (std::signbit(v)) {
    out += '-';
    v = -v;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

void print(const Expr& e, int need, std::string& out) {
  const Node& n = e.node();
  const bool wrap = prec(n) < need;
  if (wrap) out += '(';
  switch (n.kind) {
    case Node::Kind::Constant: print_constant(n.value, out); break;
    case Node::Kind::Var: out += 't'; break;
    case Node::Kind::Neg:
      out += '-';
      print(n.children[0], kUnary, out);
      break;
    case Node::Kind::Call:
      out += func_name(n.func);
      out += '(';
      print(n.children[0], 0, out);
      out += ')';
      break;
    case Node::Kind::Binary: {
      static constexpr const char* kSymbol[] = {" + ", " - ", "*", "/", "^"};
      const int own = prec(n);
      const int lhs_need = n.op == BinaryOp::Pow ? kAtom : own;
      const int rhs_need = n.op == BinaryOp::Pow ? kUnary : own + 1;
      print(n.children[0], lhs_need, out);
      out += kSymbol[static_cast<int>(n.op)];
      print(n.children[1], rhs_need, out);
      break;
    }
  }
  if (wrap) out += ')';
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

double eval_expr(const Expr& e, double t) { return eval(e.node(), t); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

RealFn to_function(Expr e) {
  return [e = std::move(e)](double t) { return eval_expr(e, t); };
}

}  // namespace rf::expr

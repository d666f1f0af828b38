#include "hfm/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "hfm/error.hpp"
#include "hfm/gamma.hpp"

namespace hfm {

struct Expr::Node {
  Kind kind;
  std::size_t offset;
  double value = 0.0;
  Expr lhs_expr;
  Expr rhs_expr;
  bool has_lhs = false;
  bool has_rhs = false;
};

namespace {

const char* kind_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Number: return "number";
    case Expr::Kind::Variable: return "t";
    case Expr::Kind::Negate: return "negation";
    case Expr::Kind::Add: return "sum";
    case Expr::Kind::Sub: return "difference";
    case Expr::Kind::Mul: return "product";
    case Expr::Kind::Div: return "quotient";
    case Expr::Kind::Pow: return "power";
    case Expr::Kind::Gamma: return "gamma";
    case Expr::Kind::Sqrt: return "sqrt";
  }
  return "?";
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Expr::Expr() : node_(nullptr) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::number(double value, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->offset = offset;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->offset = offset;
  return Expr(std::move(n));
}

Expr Expr::unary(Kind kind, Expr operand, std::size_t offset) {
  // Negation of a literal folds into the literal.
  if (kind == Kind::Negate && operand.kind() == Kind::Number) {
    return number(-operand.value(), offset);
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->offset = offset;
  n->lhs_expr = std::move(operand);
  n->has_lhs = true;
  return Expr(std::move(n));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->offset = offset;
  n->lhs_expr = std::move(lhs);
  n->rhs_expr = std::move(rhs);
  n->has_lhs = n->has_rhs = true;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_ ? node_->kind : Kind::Number; }
std::size_t Expr::offset() const noexcept { return node_ ? node_->offset : 0; }
double Expr::value() const noexcept { return node_ ? node_->value : 0.0; }

const Expr& Expr::lhs() const {
  if (!node_ || !node_->has_lhs) throw Error("expression node has no operand");
  return node_->lhs_expr;
}

const Expr& Expr::rhs() const {
  if (!node_ || !node_->has_rhs) throw Error("expression node has no second operand");
  return node_->rhs_expr;
}

double Expr::operator()(double t) const {
  if (!node_) return 0.0;
  double r = 0.0;
  switch (node_->kind) {
    case Kind::Number: r = node_->value; break;
    case Kind::Variable: r = t; break;
    case Kind::Negate: r = -lhs()(t); break;
    case Kind::Add: r = lhs()(t) + rhs()(t); break;
    case Kind::Sub: r = lhs()(t) - rhs()(t); break;
    case Kind::Mul: r = lhs()(t) * rhs()(t); break;
    case Kind::Div: r = lhs()(t) / rhs()(t); break;
    case Kind::Pow: r = std::pow(lhs()(t), rhs()(t)); break;
    case Kind::Sqrt: r = std::sqrt(lhs()(t)); break;
    case Kind::Gamma: {
      const double x = lhs()(t);
      try {
        r = gamma(x);
      } catch (const DomainError&) {
        r = std::nan("");
      }
      break;
    }
  }
  if (!std::isfinite(r)) {
    throw EvalError(node_->offset, std::string("non-finite ") + kind_name(node_->kind) +
                                       " at offset " + std::to_string(node_->offset) +
                                       " (t = " + format_number(t) + "): " + to_string());
  }
  return r;
}

std::string Expr::to_string() const {
  if (!node_) return "0";
  switch (node_->kind) {
    case Kind::Number:
      return std::signbit(node_->value) ? "(" + format_number(node_->value) + ")"
                                        : format_number(node_->value);
    case Kind::Variable: return "t";
    case Kind::Negate: return "(-" + lhs().to_string() + ")";
    case Kind::Add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::Sub: return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Kind::Mul: return "(" + lhs().to_string() + " * " + rhs().to_string() + ")";
    case Kind::Div: return "(" + lhs().to_string() + " / " + rhs().to_string() + ")";
    case Kind::Pow: return "(" + lhs().to_string() + " ^ " + rhs().to_string() + ")";
    case Kind::Gamma: return "gamma(" + lhs().to_string() + ")";
    case Kind::Sqrt: return "sqrt(" + lhs().to_string() + ")";
  }
  return "?";
}

bool Expr::same_structure(const Expr& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Number: return value() == other.value();
    case Kind::Variable: return true;
    case Kind::Negate:
    case Kind::Gamma:
    case Kind::Sqrt: return lhs().same_structure(other.lhs());
    default: return lhs().same_structure(other.lhs()) && rhs().same_structure(other.rhs());
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "empty expression at offset " + std::to_string(pos_));
    Expr e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, "syntax error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::Add, lhs, term(), at);
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::Sub, lhs, term(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::Mul, lhs, factor(), at);
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::Div, lhs, factor(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return Expr::unary(Expr::Kind::Negate, factor(), at);
    Expr base = primary();
    skip_ws();
    const std::size_t op = pos_;
    if (accept('^')) return Expr::binary(Expr::Kind::Pow, base, factor(), op);
    return base;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      const std::string_view name = src_.substr(pos_, end - pos_);
      if (name == "t") {
        pos_ = end;
        return Expr::variable(at);
      }
      Expr::Kind kind;
      if (name == "gamma") {
        kind = Expr::Kind::Gamma;
      } else if (name == "sqrt") {
        kind = Expr::Kind::Sqrt;
      } else {
        throw ParseError(at, "unknown function '" + std::string(name) + "' at offset " +
                                 std::to_string(at));
      }
      pos_ = end;
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      Expr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return Expr::unary(kind, arg, at);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    };
    digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      digits();
    }
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-')) ++exp;
      if (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) {
        end = exp;
        digits();
      }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + at, src_.data() + end, v);
    if (ec != std::errc() || ptr != src_.data() + end) {
      fail("malformed number");
    }
    pos_ = end;
    return Expr::number(v, at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view src) { return Parser(src).run(); }

}  // namespace hfm

#include "eisenlab/expr.hpp"

#include "eisenlab/errors.hpp"

namespace eisenlab {

struct Expr::Node {
  Kind kind;
  Rational value;
  char name = 0;
  int exponent = 0;
  std::vector<Expr> children;
};

Expr::Expr(const Rational& c)
    : node_(std::make_shared<const Node>(Node{Kind::Constant, c, 0, 0, {}})) {}

Expr Expr::symbol(char name) {
  static const std::string allowed = "pqrABC";
  if (allowed.find(name) == std::string::npos) {
    throw Error(std::string("unknown symbol '") + name + "'");
  }
  return Expr(std::make_shared<const Node>(Node{Kind::Symbol, 0, name, 0, {}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::constant() const { return node_->value; }
char Expr::symbol_name() const { return node_->name; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
int Expr::exponent() const { return node_->exponent; }

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::Add, 0, 0, 0, {a, b}}));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::Mul, 0, 0, 0, {a, b}}));
}

Expr operator/(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::Div, 0, 0, 0, {a, b}}));
}

Expr Expr::operator-() const {
  return Expr(std::make_shared<const Node>(Node{Kind::Neg, 0, 0, 0, {*this}}));
}

Expr pow(const Expr& base, int e) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::Pow, 0, 0, e, {base}}));
}

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::Constant: return "(" + eisenlab::to_string(constant()) + ")";
    case Kind::Symbol: return std::string(1, symbol_name());
    case Kind::Add: return "(" + children()[0].to_string() + " + " + children()[1].to_string() + ")";
    case Kind::Mul: return children()[0].to_string() + "*" + children()[1].to_string();
    case Kind::Div: return "(" + children()[0].to_string() + ")/(" + children()[1].to_string() + ")";
    case Kind::Neg: return "-(" + children()[0].to_string() + ")";
    case Kind::Pow: return "(" + children()[0].to_string() + ")^" + std::to_string(exponent());
  }
  return {};
}

namespace {

MultiPoly symbol_poly(char name) {
  using V = Var;
  switch (name) {
    case 'p': return MultiPoly::variable(V::p);
    case 'q': return MultiPoly::variable(V::q);
    case 'r': return -(MultiPoly::variable(V::p) + MultiPoly::variable(V::q));
    case 'A': return MultiPoly::variable(V::A);
    case 'B': return MultiPoly::variable(V::B);
    case 'C': return -(MultiPoly::variable(V::A) + MultiPoly::variable(V::B));
    default: throw Error("unknown symbol");
  }
}

Rational symbol_value(char name, const Point& at) {
  switch (name) {
    case 'p': return at[0];
    case 'q': return at[1];
    case 'r': return -at[0] - at[1];
    case 'A': return at[2];
    case 'B': return at[3];
    case 'C': return -at[2] - at[3];
    default: throw Error("unknown symbol");
  }
}

}  // namespace

RatFunc ratfunc_normalize(const Expr& expr) {
  using K = Expr::Kind;
  switch (expr.kind()) {
    case K::Constant: return RatFunc(expr.constant());
    case K::Symbol: return RatFunc(symbol_poly(expr.symbol_name()));
    case K::Add: return ratfunc_normalize(expr.children()[0]) + ratfunc_normalize(expr.children()[1]);
    case K::Mul: return ratfunc_normalize(expr.children()[0]) * ratfunc_normalize(expr.children()[1]);
    case K::Div: {
      RatFunc den = ratfunc_normalize(expr.children()[1]);
      if (den.is_zero()) throw ZeroDenominator();
      return ratfunc_normalize(expr.children()[0]) / den;
    }
    case K::Neg: return -ratfunc_normalize(expr.children()[0]);
    case K::Pow: {
      RatFunc base = ratfunc_normalize(expr.children()[0]);
      if (expr.exponent() < 0 && base.is_zero()) throw ZeroDenominator();
      return base.pow(expr.exponent());
    }
  }
  throw Error("malformed expression");
}

Rational evaluate(const Expr& expr, const Point& at) {
  using K = Expr::Kind;
  switch (expr.kind()) {
    case K::Constant: return expr.constant();
    case K::Symbol: return symbol_value(expr.symbol_name(), at);
    case K::Add: return evaluate(expr.children()[0], at) + evaluate(expr.children()[1], at);
    case K::Mul: return evaluate(expr.children()[0], at) * evaluate(expr.children()[1], at);
    case K::Div: {
      Rational den = evaluate(expr.children()[1], at);
      if (den == 0) throw DivisionByZero();
      return evaluate(expr.children()[0], at) / den;
    }
    case K::Neg: return -evaluate(expr.children()[0], at);
    case K::Pow: {
      Rational base = evaluate(expr.children()[0], at);
      int e = expr.exponent();
      if (e < 0) {
        if (base == 0) throw DivisionByZero();
        base = 1 / base;
        e = -e;
      }
      Rational out = 1;
      for (int i = 0; i < e; ++i) out *= base;
      return out;
    }
  }
  throw Error("malformed expression");
}

}  // namespace eisenlab

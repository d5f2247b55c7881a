#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eisenlab/ratfunc.hpp"

namespace eisenlab {

/// Formal expression over the symbols p, q, r, A, B, C with rational constants.
/// Immutable; subtrees are shared.
class Expr {
 public:
  enum class Kind { Constant, Symbol, Add, Mul, Div, Neg, Pow };

  Expr(const Rational& c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// One of 'p', 'q', 'r', 'A', 'B', 'C'.
  static Expr symbol(char name);

  Kind kind() const;
  const Rational& constant() const;
  char symbol_name() const;
  const std::vector<Expr>& children() const;
  int exponent() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  friend Expr pow(const Expr& base, int e);

  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

namespace sym {
inline Expr p() { return Expr::symbol('p'); }
inline Expr q() { return Expr::symbol('q'); }
inline Expr r() { return Expr::symbol('r'); }
inline Expr A() { return Expr::symbol('A'); }
inline Expr B() { return Expr::symbol('B'); }
inline Expr C() { return Expr::symbol('C'); }
}  // namespace sym

/// Substitutes r := -p-q and C := -A-B and flattens to a normalized RatFunc.
/// The result is zero iff the expression vanishes on the constraint variety.
/// Throws ZeroDenominator when a divisor normalizes to zero.
RatFunc ratfunc_normalize(const Expr& expr);

/// Direct evaluation at (p, q, A, B) with r and C derived from the constraints.
/// Throws DivisionByZero.
Rational evaluate(const Expr& expr, const Point& at);

}  // namespace eisenlab

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "eisenlab/rational.hpp"

namespace eisenlab {

/// Variables of the constrained ring; r = -p-q and C = -A-B are eliminated.
enum class Var : int { p = 0, q = 1, A = 2, B = 3 };
inline constexpr int kNumVars = 4;

using Exponent = std::array<int, kNumVars>;
using Point = std::array<Rational, kNumVars>;

/// Lexicographic order with p < q < A < B (B is the most significant variable).
struct TermOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (int i = kNumVars - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Sparse polynomial in p, q, A, B over Q. Zero coefficients are never stored,
/// so two polynomials are equal iff their term maps are equal.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, TermOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree(Var v) const;
  int total_degree() const;

  /// Leading term under TermOrder; undefined on zero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Rational content, signed so that *this / content() has integer,
  /// coprime coefficients and a positive leading coefficient.
  Rational content() const;
  MultiPoly primitive() const;
  /// Componentwise minimum exponent over all terms.
  Exponent monomial_gcd() const;

  /// Coefficients with respect to v: degree -> polynomial free of v.
  std::map<int, MultiPoly> coefficients_in(Var v) const;
  /// Highest variable (in TermOrder significance) that occurs, if any.
  std::optional<Var> main_variable() const;

  Rational evaluate(const Point& at) const;
  MultiPoly pow(unsigned e) const;

  /// e.g. "2*p*B - q*A + 1/3".
  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// f / g when g divides f exactly, otherwise nullopt. g must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient (1 for coprime inputs, 0 only for gcd(0, 0)).
/// Recursive content / primitive-part pseudo-remainder sequence.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

char var_name(Var v);

}  // namespace eisenlab

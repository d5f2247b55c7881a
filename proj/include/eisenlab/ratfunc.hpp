#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisenlab/multipoly.hpp"

namespace eisenlab {

/// Rational function numer / denom over Q in p, q, A, B, kept in lowest terms.
///
/// The denominator is held as a product of primitive factors with positive
/// leading coefficients. Sums take the factorwise lcm and cancel common factors
/// by trial division, falling back to a polynomial gcd for nonlinear factors,
/// so large telescoping sums stay small.
class RatFunc {
 public:
  struct Factor {
    MultiPoly poly;
    int multiplicity;
  };

  RatFunc() = default;
  RatFunc(MultiPoly numer);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(MultiPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}  // NOLINT(google-explicit-constructor)

  /// Throws ZeroDenominator if denom is the zero polynomial.
  static RatFunc fraction(const MultiPoly& numer, const MultiPoly& denom);

  const MultiPoly& numer() const { return numer_; }
  /// Expanded denominator: primitive, positive leading coefficient, coprime to numer().
  MultiPoly denom() const;
  const std::vector<Factor>& denominator_factors() const { return factors_; }

  bool is_zero() const { return numer_.is_zero(); }

  /// Throws DivisionByZero if the denominator vanishes at the point.
  Rational evaluate(const Point& at) const;

  /// "0", "numer", or "(numer)/(denom)".
  std::string to_string() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  void absorb_denominator(const MultiPoly& d, int multiplicity);
  void add_factor(const MultiPoly& f, int multiplicity);
  void cancel();

  MultiPoly numer_;
  std::vector<Factor> factors_;
};

}  // namespace eisenlab

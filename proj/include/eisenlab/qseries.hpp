#pragma once

#include <vector>

#include "eisenlab/cyclotomic.hpp"

namespace eisenlab {

/// Truncated expansion sum_{n=0}^{B} a_n q_N^n, q_N = exp(2 pi i z / N), with
/// coefficients in Q(zeta_N). Exponents above the truncation are unknown, not zero.
class QSeries {
 public:
  QSeries(int level, int truncation);

  int level() const { return level_; }
  int truncation() const { return truncation_; }

  const Cyclotomic& operator[](int n) const { return coeffs_.at(n); }
  const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
  /// Stores c (lifted to conductor level()) at exponent n.
  void set(int n, const Cyclotomic& c);
  void add(int n, const Cyclotomic& c);

  bool is_zero() const;
  std::vector<int> nonzero_exponents() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Cyclotomic& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Cyclotomic& s) { return a *= s; }
  /// Truncated Cauchy product.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  friend bool operator==(const QSeries& a, const QSeries& b);

  /// (2 pi i)^-1 d/dz: multiplies the q_N^n coefficient by n / N.
  QSeries theta() const;

  /// Value of the truncated polynomial at a given q_N.
  ComplexApprox evaluate(const ComplexApprox& q) const;

  /// First `truncation` + 1 coefficients.
  QSeries truncated(int truncation) const;

 private:
  void check_compatible(const QSeries& o) const;

  int level_;
  int truncation_;
  std::vector<Cyclotomic> coeffs_;
};

/// Exponent n -> n * (N_new / N), coefficients lifted to Q(zeta_{N_new}).
/// Throws NotDivisible.
QSeries rescale_level(const QSeries& s, int new_level);

}  // namespace eisenlab

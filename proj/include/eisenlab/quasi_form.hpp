#pragma once

#include <vector>

#include "eisenlab/qseries.hpp"

namespace eisenlab {

/// F_0 + F_1 Y + F_2 Y^2 with Y = 1/(4 pi Im z). Depth is at most 2.
class QuasiForm {
 public:
  QuasiForm(int weight, std::vector<QSeries> components);
  static QuasiForm zero(int weight, int level, int truncation);
  static QuasiForm holomorphic(int weight, QSeries f);

  int weight() const { return weight_; }
  int level() const { return components_.front().level(); }
  int truncation() const { return components_.front().truncation(); }
  int depth() const { return static_cast<int>(components_.size()) - 1; }
  const QSeries& component(int j) const { return components_.at(j); }
  const std::vector<QSeries>& components() const { return components_; }

  /// Drops vanishing top components (depth never goes below 0).
  QuasiForm trimmed() const;
  bool is_zero() const;

  QuasiForm& operator+=(const QuasiForm& o);
  QuasiForm& operator-=(const QuasiForm& o);
  QuasiForm& operator*=(const Cyclotomic& s);
  friend QuasiForm operator+(QuasiForm a, const QuasiForm& b) { return a += b; }
  friend QuasiForm operator-(QuasiForm a, const QuasiForm& b) { return a -= b; }
  friend QuasiForm operator*(QuasiForm a, const Cyclotomic& s) { return a *= s; }
  QuasiForm operator-() const;
  /// Equal weight, level, truncation and components after trimming.
  friend bool operator==(const QuasiForm& a, const QuasiForm& b);

  /// Y * f, same weight.
  QuasiForm times_y() const;
  QuasiForm rescaled(int new_level) const;
  QuasiForm truncated(int truncation) const;

 private:
  void check_compatible(const QuasiForm& o) const;

  int weight_;
  std::vector<QSeries> components_;
};

QuasiForm quasi_mul(const QuasiForm& f, const QuasiForm& g);

/// (2 pi i)^-1 d/dz, using theta(Y) = Y^2. Weight goes up by 2.
QuasiForm theta(const QuasiForm& f);

/// Raising operator theta - w Y on weight w.
QuasiForm delta(const QuasiForm& f);

struct EvalPoint {
  ComplexApprox z;
  explicit EvalPoint(ComplexApprox point);
};

/// Components as polynomials in q_N = exp(2 pi i z / N), Y^d as (4 pi Im z)^-d.
ComplexApprox eval_at(const QuasiForm& f, const EvalPoint& z);

}  // namespace eisenlab

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "eisenlab/rational.hpp"

namespace eisenlab {

using Real = boost::multiprecision::mpfr_float;

/// Default working precision in decimal digits: 60, or EISENLAB_DIGITS when set.
int default_digits();
/// Overrides the environment; 0 restores it.
void set_default_digits(int digits);

/// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real real_from(const Rational& x);
Real pi_real();

/// Multiprecision complex number. Arithmetic runs at the current MPFR default
/// precision; `digits` records the precision the value was produced at.
struct ComplexApprox {
  Real re;
  Real im;
  int digits = 0;

  ComplexApprox();
  ComplexApprox(Real re_, Real im_);

  static ComplexApprox from_rational(const Rational& x);
  /// exp(i * theta)
  static ComplexApprox unit(const Real& theta);

  ComplexApprox& operator+=(const ComplexApprox& o);
  ComplexApprox& operator-=(const ComplexApprox& o);
  ComplexApprox& operator*=(const ComplexApprox& o);
  ComplexApprox& operator/=(const ComplexApprox& o);
  ComplexApprox& operator*=(const Real& s);

  friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
  friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
  friend ComplexApprox operator*(ComplexApprox a, const ComplexApprox& b) { return a *= b; }
  friend ComplexApprox operator/(ComplexApprox a, const ComplexApprox& b) { return a /= b; }
  friend ComplexApprox operator*(ComplexApprox a, const Real& s) { return a *= s; }
  ComplexApprox operator-() const;

  Real abs() const;
  std::string to_string(int shown_digits = 20) const;
};

ComplexApprox exp(const ComplexApprox& z);

/// i^k
ComplexApprox i_power(int k);

}  // namespace eisenlab

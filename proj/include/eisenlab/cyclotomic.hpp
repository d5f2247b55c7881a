#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eisenlab/complex_approx.hpp"
#include "eisenlab/rational.hpp"

namespace eisenlab {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)
/// reduced modulo Phi_N, so equality is coefficient comparison.
///
/// Binary operations on elements of different conductors lift both operands
/// to Q(zeta_lcm) first.
class Cyclotomic {
 public:
  /// Zero in Q = Q(zeta_1).
  Cyclotomic();
  /// Zero in Q(zeta_N).
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& value);

  /// zeta_N^e for any integer e.
  static Cyclotomic zeta(int conductor, long e = 1);

  /// Canonical representative of sum raw[j] zeta^j.
  static Cyclotomic reduce(int conductor, std::span<const Rational> raw);

  /// Takes coefficients that are already in canonical form (size phi(N)).
  static Cyclotomic from_canonical(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful as "the value" only when is_rational().
  const Rational& constant() const { return coeffs_[0]; }

  /// Multiplicative inverse via extended Euclid against Phi_N.
  Cyclotomic inverse() const;

  /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N).
  Cyclotomic lift(int target_conductor) const;

  /// Preimage in Q(zeta_n) for n | conductor, if this element lies in that subfield.
  std::optional<Cyclotomic> restrict_to(int n) const;

  /// Automorphism zeta -> zeta^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const;

  ComplexApprox embed(int digits) const;
  /// Embedding at the current MPFR default precision.
  ComplexApprox embed() const;

  /// "c0 + c1*z + ... | N" with every coefficient written as num/den.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs, int);

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Accumulates sums of products without reducing each term; used by series
/// convolution where one output coefficient collects many products.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(int conductor);
  /// Both factors must have exactly this conductor.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic take();

 private:
  int conductor_;
  int phi_;
  std::vector<Rational> raw_;
  bool dirty_ = false;
};

Cyclotomic cyclo_reduce(int conductor, std::span<const Rational> raw);
Cyclotomic cyclo_invert(const Cyclotomic& x);
ComplexApprox cyclo_embed(const Cyclotomic& x, int precision_digits);

}  // namespace eisenlab

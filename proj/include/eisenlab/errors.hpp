#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eisenlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("denominator normalizes to the zero polynomial") {}
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& id) : Error("unknown identity id: " + id) {}
};

class NonCoprimeShear : public Error {
 public:
  NonCoprimeShear(long n, long s)
      : Error("shear " + std::to_string(s) + " is not coprime to level " + std::to_string(n)) {}
};

class NotConsecutive : public Error {
 public:
  explicit NotConsecutive(const std::string& what) : Error("not a consecutive hull pair: " + what) {}
};

class InvalidIndex : public Error {
 public:
  explicit InvalidIndex(const std::string& what) : Error("invalid Eisenstein index: " + what) {}
};

class NotDivisible : public Error {
 public:
  NotDivisible(int from, int to)
      : Error("level " + std::to_string(from) + " does not divide " + std::to_string(to)) {}
};

class DepthOverflow : public Error {
 public:
  DepthOverflow() : Error("nearly-holomorphic depth exceeds 2") {}
};

class UnsupportedWeight : public Error {
 public:
  explicit UnsupportedWeight(const std::string& what) : Error("unsupported weight: " + what) {}
};

/// Raised by the peeling step when a Y-component is not a combination of
/// Eisenstein series. Carries the exponents where the residual is nonzero.
class TopComponentNotEisenstein : public Error {
 public:
  TopComponentNotEisenstein(int y_degree, std::vector<int> exponents)
      : Error("Y^" + std::to_string(y_degree) + " component is not in the Eisenstein span"),
        y_degree_(y_degree),
        exponents_(std::move(exponents)) {}

  int y_degree() const { return y_degree_; }
  const std::vector<int>& residual_exponents() const { return exponents_; }

 private:
  int y_degree_;
  std::vector<int> exponents_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace eisenlab

#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "eisenlab/eisenstein.hpp"

namespace eisenlab {

/// Every nonzero E_{k,(c1,c2)} at level N; weight 2 members are completed (+ Y).
struct EisBasis {
  int weight;
  int level;
  int truncation;
  std::vector<std::pair<EisIndex, QuasiForm>> elements;
};

EisBasis eis_basis(int k, int n, int truncation);

struct SpanCoefficient {
  EisIndex index;
  Cyclotomic value;
};

/// target = sum coefficients * basis + residual, exactly up to the truncation.
struct SpanSolution {
  std::vector<SpanCoefficient> coefficients;  // nonzero ones only, basis order
  QuasiForm residual;

  bool in_span() const { return residual.is_zero(); }
  /// Exponents n with a nonzero residual coefficient in some Y-component.
  std::vector<int> residual_exponents() const;
};

/// Reduced row echelon form of a basis, pivots in (Y-degree, exponent) order.
class SpanSolver {
 public:
  explicit SpanSolver(EisBasis basis);
  SpanSolution solve(const QuasiForm& target) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  const EisBasis& basis() const { return basis_; }

 private:
  struct Row {
    std::vector<Cyclotomic> entries;  // dense over columns
    std::vector<Cyclotomic> combo;    // row = sum combo[i] * basis[i]
  };

  EisBasis basis_;
  int columns_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;  // pivot column of rows_[i]
};

SpanSolution span_solve(const QuasiForm& target, const EisBasis& basis);

/// Shared solver for eis_basis(k, n, truncation), built once per run.
std::shared_ptr<const SpanSolver> eis_solver(int k, int n, int truncation);

/// scale * generator was subtracted; generator = delta(E_source) with
/// E_source taken from eis_basis(source.weight, ...).
struct CertificateEntry {
  EisIndex source;
  QuasiForm generator;
  Cyclotomic scale;
};

struct PeelResult {
  QSeries remainder;
  std::vector<CertificateEntry> certificate;
};

/// Removes the Y-components of F by subtracting delta-images of Eisenstein
/// series. Throws UnsupportedWeight or TopComponentNotEisenstein.
PeelResult peel(const QuasiForm& f);

struct Certification {
  SpanSolution solution;
  std::vector<CertificateEntry> certificate;
  bool verified() const { return solution.in_span(); }
};

/// peel, then solve the remainder against eis_basis(k). Weight <= 2 input
/// goes to the solver directly since no delta-image lands there.
Certification certify_orthogonal(const QuasiForm& f);

}  // namespace eisenlab

#pragma once

#include <ostream>

#include "eisenlab/quasi_form.hpp"

namespace eisenlab {

/// Weight k, level N and the torsion point lambda = (c1/N, c2/N).
struct EisIndex {
  int weight;
  int level;
  int c1;
  int c2;

  /// Reduces c1, c2 into [0, N). Throws InvalidIndex for k < 1 or N < 1.
  EisIndex normalized() const;
  friend bool operator==(const EisIndex&, const EisIndex&) = default;
};

/// q_N^0 coefficient of eis_series(idx, .).
Cyclotomic eis_constant_term(const EisIndex& idx);

/// Normalized expansion (k-1)! (-2 pi i)^-k E_{k,lambda} in powers of
/// q_N = exp(2 pi i z / N), truncated at exponent B. Weight 2 carries the
/// extra component 1 * Y. Results are memoized per (index, B).
QuasiForm eis_series(const EisIndex& idx, int truncation);

/// N (ceil(k mu / 12) + 1), mu the index of Gamma(N)/{+-1}.
int sturm_bound(int k, int n);

/// |E_{k,(c1,c2)}(i) - i^k E_{k,(c2,-c1)}(i)| < tol.
bool check_s_transform(const EisIndex& idx, int truncation, const Rational& tol);
/// Same check, also reporting the difference.
Real s_transform_defect(const EisIndex& idx, int truncation);

/// Header "level,weight,c1,c2,truncation,Ydepth", its values, then per
/// component a "Y^j" line followed by "exponent, cyclotomic-string" lines
/// for the nonzero coefficients.
void write_series_csv(std::ostream& os, const EisIndex& idx, const QuasiForm& f);

}  // namespace eisenlab

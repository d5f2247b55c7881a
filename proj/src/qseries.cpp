#include "eisenlab/qseries.hpp"

#include "eisenlab/errors.hpp"

namespace eisenlab {

QSeries::QSeries(int level, int truncation)
    : level_(level), truncation_(truncation), coeffs_(truncation + 1, Cyclotomic(level)) {
  if (truncation < 0) throw Error("truncation must be non-negative");
}

void QSeries::set(int n, const Cyclotomic& c) {
  coeffs_.at(n) = c.conductor() == level_ ? c : c.lift(level_);
}

void QSeries::add(int n, const Cyclotomic& c) { coeffs_.at(n) += c; }

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<int> QSeries::nonzero_exponents() const {
  std::vector<int> out;
  for (int n = 0; n <= truncation_; ++n) {
    if (!coeffs_[n].is_zero()) out.push_back(n);
  }
  return out;
}

void QSeries::check_compatible(const QSeries& o) const {
  if (level_ != o.level_ || truncation_ != o.truncation_) {
    throw Error("q-series level/truncation mismatch");
  }
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_compatible(o);
  for (int n = 0; n <= truncation_; ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  check_compatible(o);
  for (int n = 0; n <= truncation_; ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Cyclotomic& s) {
  const Cyclotomic scale = s.conductor() == level_ ? s : s.lift(level_);
  if (scale.is_rational()) {
    for (auto& c : coeffs_) c *= scale.constant();
  } else {
    for (auto& c : coeffs_) {
      if (!c.is_zero()) c = c * scale;
    }
  }
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  const int top = a.truncation_;
  std::vector<int> nz_a = a.nonzero_exponents();
  std::vector<bool> nz_b(top + 1);
  for (int n = 0; n <= top; ++n) nz_b[n] = !b.coeffs_[n].is_zero();
  QSeries out(a.level_, top);
  CycloAccumulator acc(a.level_);
  for (int n = 0; n <= top; ++n) {
    for (int i : nz_a) {
      if (i > n) break;
      if (nz_b[n - i]) acc.add_product(a.coeffs_[i], b.coeffs_[n - i]);
    }
    out.coeffs_[n] = acc.take();
  }
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.level_ == b.level_ && a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
}

QSeries QSeries::theta() const {
  QSeries out = *this;
  for (int n = 0; n <= truncation_; ++n) out.coeffs_[n] *= make_rational(n, level_);
  return out;
}

ComplexApprox QSeries::evaluate(const ComplexApprox& q) const {
  ComplexApprox acc;
  for (int n = truncation_; n >= 0; --n) {
    acc *= q;
    if (!coeffs_[n].is_zero()) acc += coeffs_[n].embed();
  }
  return acc;
}

QSeries QSeries::truncated(int truncation) const {
  if (truncation > truncation_) throw Error("cannot extend a truncated series");
  QSeries out(level_, truncation);
  for (int n = 0; n <= truncation; ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

QSeries rescale_level(const QSeries& s, int new_level) {
  if (new_level % s.level() != 0) throw NotDivisible(s.level(), new_level);
  const int step = new_level / s.level();
  QSeries out(new_level, s.truncation() * step);
  for (int n = 0; n <= s.truncation(); ++n) {
    if (!s[n].is_zero()) out.set(n * step, s[n]);
  }
  return out;
}

}  // namespace eisenlab

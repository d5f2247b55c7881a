#include "eisenlab/quasi_form.hpp"

#include "eisenlab/errors.hpp"

namespace eisenlab {

QuasiForm::QuasiForm(int weight, std::vector<QSeries> components)
    : weight_(weight), components_(std::move(components)) {
  if (components_.empty()) throw Error("quasi-form needs at least one component");
  if (components_.size() > 3) throw DepthOverflow();
  for (const auto& c : components_) {
    if (c.level() != components_.front().level() || c.truncation() != components_.front().truncation()) {
      throw Error("quasi-form components disagree on level or truncation");
    }
  }
}

QuasiForm QuasiForm::zero(int weight, int level, int truncation) {
  return QuasiForm(weight, {QSeries(level, truncation)});
}

QuasiForm QuasiForm::holomorphic(int weight, QSeries f) { return QuasiForm(weight, {std::move(f)}); }

QuasiForm QuasiForm::trimmed() const {
  QuasiForm out = *this;
  while (out.components_.size() > 1 && out.components_.back().is_zero()) out.components_.pop_back();
  return out;
}

bool QuasiForm::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void QuasiForm::check_compatible(const QuasiForm& o) const {
  if (weight_ != o.weight_) throw Error("quasi-form weight mismatch");
  if (level() != o.level() || truncation() != o.truncation()) {
    throw Error("quasi-form level/truncation mismatch");
  }
}

QuasiForm& QuasiForm::operator+=(const QuasiForm& o) {
  check_compatible(o);
  while (components_.size() < o.components_.size()) components_.emplace_back(level(), truncation());
  for (std::size_t j = 0; j < o.components_.size(); ++j) components_[j] += o.components_[j];
  return *this;
}

QuasiForm& QuasiForm::operator-=(const QuasiForm& o) {
  check_compatible(o);
  while (components_.size() < o.components_.size()) components_.emplace_back(level(), truncation());
  for (std::size_t j = 0; j < o.components_.size(); ++j) components_[j] -= o.components_[j];
  return *this;
}

QuasiForm& QuasiForm::operator*=(const Cyclotomic& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

QuasiForm QuasiForm::operator-() const {
  QuasiForm out = *this;
  for (auto& c : out.components_) c = -c;
  return out;
}

bool operator==(const QuasiForm& a, const QuasiForm& b) {
  if (a.weight_ != b.weight_ || a.level() != b.level() || a.truncation() != b.truncation()) return false;
  return a.trimmed().components_ == b.trimmed().components_;
}

QuasiForm QuasiForm::times_y() const {
  QuasiForm t = trimmed();
  if (t.is_zero()) return t;
  std::vector<QSeries> comps{QSeries(level(), truncation())};
  for (const auto& c : t.components_) comps.push_back(c);
  return QuasiForm(weight_, std::move(comps));
}

QuasiForm QuasiForm::rescaled(int new_level) const {
  std::vector<QSeries> comps;
  for (const auto& c : components_) comps.push_back(rescale_level(c, new_level));
  return QuasiForm(weight_, std::move(comps));
}

QuasiForm QuasiForm::truncated(int truncation) const {
  std::vector<QSeries> comps;
  for (const auto& c : components_) comps.push_back(c.truncated(truncation));
  return QuasiForm(weight_, std::move(comps));
}

QuasiForm quasi_mul(const QuasiForm& f_in, const QuasiForm& g_in) {
  const QuasiForm f = f_in.trimmed();
  const QuasiForm g = g_in.trimmed();
  if (f.level() != g.level() || f.truncation() != g.truncation()) {
    throw Error("quasi_mul: level/truncation mismatch");
  }
  if (f.depth() + g.depth() > 2) throw DepthOverflow();
  std::vector<QSeries> comps(f.depth() + g.depth() + 1, QSeries(f.level(), f.truncation()));
  for (int i = 0; i <= f.depth(); ++i) {
    if (f.component(i).is_zero()) continue;
    for (int j = 0; j <= g.depth(); ++j) {
      if (g.component(j).is_zero()) continue;
      comps[i + j] += f.component(i) * g.component(j);
    }
  }
  return QuasiForm(f.weight() + g.weight(), std::move(comps));
}

QuasiForm theta(const QuasiForm& f_in) {
  const QuasiForm f = f_in.trimmed();
  const int d = f.is_zero() ? 0 : f.depth();
  const bool grows = d > 0;
  if (grows && d + 1 > 2) throw DepthOverflow();
  std::vector<QSeries> comps(d + (grows ? 2 : 1), QSeries(f.level(), f.truncation()));
  for (int j = 0; j <= d; ++j) {
    comps[j] += f.component(j).theta();
    if (j > 0) comps[j + 1] += f.component(j) * Cyclotomic(1, Rational(j));
  }
  return QuasiForm(f.weight() + 2, std::move(comps));
}

QuasiForm delta(const QuasiForm& f) {
  QuasiForm out = theta(f);
  QuasiForm wy = f.times_y();
  wy *= Cyclotomic(1, Rational(f.weight()));
  return (out - QuasiForm(out.weight(), wy.components())).trimmed();
}

EvalPoint::EvalPoint(ComplexApprox point) : z(std::move(point)) {
  if (!(z.im > 0)) throw Error("evaluation point must lie in the upper half plane");
}

ComplexApprox eval_at(const QuasiForm& f, const EvalPoint& point) {
  const Real two_pi = 2 * pi_real();
  // q_N = exp(2 pi i z / N)
  ComplexApprox arg(-two_pi * point.z.im / f.level(), two_pi * point.z.re / f.level());
  ComplexApprox q = exp(arg);
  const Real y = 1 / (2 * two_pi * point.z.im);
  ComplexApprox total;
  Real y_pow = 1;
  for (int j = 0; j <= f.depth(); ++j) {
    if (!f.component(j).is_zero()) total += f.component(j).evaluate(q) * y_pow;
    y_pow *= y;
  }
  total.digits = point.z.digits;
  return total;
}

}  // namespace eisenlab

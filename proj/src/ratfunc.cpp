#include "eisenlab/ratfunc.hpp"

#include <algorithm>

#include "eisenlab/errors.hpp"

namespace eisenlab {

RatFunc::RatFunc(MultiPoly numer) : numer_(std::move(numer)) {}

RatFunc RatFunc::fraction(const MultiPoly& numer, const MultiPoly& denom) {
  if (denom.is_zero()) throw ZeroDenominator();
  RatFunc out(numer);
  out.absorb_denominator(denom, 1);
  out.cancel();
  return out;
}

MultiPoly RatFunc::denom() const {
  MultiPoly d(1);
  for (const auto& f : factors_) d *= f.poly.pow(f.multiplicity);
  return d;
}

Rational RatFunc::evaluate(const Point& at) const {
  Rational den = 1;
  for (const auto& f : factors_) {
    Rational v = f.poly.evaluate(at);
    if (v == 0) throw DivisionByZero();
    for (int i = 0; i < f.multiplicity; ++i) den *= v;
  }
  return numer_.evaluate(at) / den;
}

std::string RatFunc::to_string() const {
  if (factors_.empty()) return numer_.to_string();
  return "(" + numer_.to_string() + ")/(" + denom().to_string() + ")";
}

void RatFunc::add_factor(const MultiPoly& f, int multiplicity) {
  for (auto& existing : factors_) {
    if (existing.poly == f) {
      existing.multiplicity += multiplicity;
      return;
    }
  }
  factors_.push_back({f, multiplicity});
}

void RatFunc::absorb_denominator(const MultiPoly& d, int multiplicity) {
  if (d.is_zero()) throw ZeroDenominator();
  const Rational c = d.content();
  Rational scale = 1;
  for (int i = 0; i < multiplicity; ++i) scale *= c;
  numer_ *= 1 / scale;
  MultiPoly prim = d.primitive();
  const Exponent mono = prim.monomial_gcd();
  for (int i = 0; i < kNumVars; ++i) {
    if (mono[i] > 0) add_factor(MultiPoly::variable(static_cast<Var>(i)), mono[i] * multiplicity);
  }
  if (mono != Exponent{}) {
    MultiPoly stripped;
    for (const auto& [e, coeff] : prim.terms()) {
      Exponent r;
      for (int i = 0; i < kNumVars; ++i) r[i] = e[i] - mono[i];
      stripped += MultiPoly::monomial(r, coeff);
    }
    prim = std::move(stripped);
  }
  if (!prim.is_constant()) add_factor(prim, multiplicity);
}

void RatFunc::cancel() {
  if (numer_.is_zero()) {
    factors_.clear();
    return;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& f : factors_) {
      while (f.multiplicity > 0) {
        auto q = divide_exact(numer_, f.poly);
        if (!q) break;
        numer_ = std::move(*q);
        --f.multiplicity;
      }
    }
    std::erase_if(factors_, [](const Factor& f) { return f.multiplicity == 0; });
    // Linear factors are irreducible; anything larger may share a proper
    // divisor with the numerator, so split it along the gcd.
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].poly.total_degree() <= 1) continue;
      MultiPoly g = gcd(numer_, factors_[i].poly);
      if (g.is_constant()) continue;
      // f and g are primitive with positive leading coefficients, hence so is f/g.
      MultiPoly rest = *divide_exact(factors_[i].poly, g);
      const int m = factors_[i].multiplicity;
      factors_.erase(factors_.begin() + static_cast<long>(i));
      add_factor(g, m);
      if (!rest.is_constant()) add_factor(rest, m);
      changed = true;
      break;
    }
  }
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
    return a.poly.to_string() < b.poly.to_string();
  });
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Factor> common = factors_;
  for (const auto& f : o.factors_) {
    auto it = std::find_if(common.begin(), common.end(),
                           [&](const Factor& c) { return c.poly == f.poly; });
    if (it == common.end()) {
      common.push_back(f);
    } else {
      it->multiplicity = std::max(it->multiplicity, f.multiplicity);
    }
  }
  auto cofactor = [&](const std::vector<Factor>& mine) {
    MultiPoly m(1);
    for (const auto& c : common) {
      int own = 0;
      for (const auto& f : mine) {
        if (f.poly == c.poly) own = f.multiplicity;
      }
      if (c.multiplicity > own) m *= c.poly.pow(c.multiplicity - own);
    }
    return m;
  };
  numer_ = numer_ * cofactor(factors_) + o.numer_ * cofactor(o.factors_);
  factors_ = std::move(common);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  numer_ *= o.numer_;
  for (const auto& f : o.factors_) add_factor(f.poly, f.multiplicity);
  cancel();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (numer_.is_zero()) throw ZeroDenominator();
  return fraction(denom(), numer_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.numer_ = -out.numer_;
  return out;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc out = *this;
  out.numer_ = numer_.pow(static_cast<unsigned>(e));
  for (auto& f : out.factors_) f.multiplicity *= e;
  if (e == 0) out.factors_.clear();
  return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.numer_ == b.numer_ && a.denom() == b.denom();
}

}  // namespace eisenlab

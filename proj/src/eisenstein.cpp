#include "eisenlab/eisenstein.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "eisenlab/errors.hpp"

namespace eisenlab {

EisIndex EisIndex::normalized() const {
  if (weight < 1) throw InvalidIndex("weight " + std::to_string(weight) + " < 1");
  if (level < 1) throw InvalidIndex("level " + std::to_string(level) + " < 1");
  return {weight, level, static_cast<int>(mod_floor(c1, level)), static_cast<int>(mod_floor(c2, level))};
}

namespace {

// cot-polynomials: P_0 = t, P_{n+1} = -(1 + t^2) P_n', constant term first.
std::vector<Rational> cot_polynomial(int n) {
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (int step = 0; step < n; ++step) {
    std::vector<Rational> d(p.size() > 1 ? p.size() - 1 : 1, Rational(0));
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    std::vector<Rational> next(d.size() + 2, Rational(0));
    for (std::size_t i = 0; i < d.size(); ++i) {
      next[i] -= d[i];
      next[i + 2] -= d[i];
    }
    p = std::move(next);
  }
  return p;
}

Cyclotomic cyclo_power(const Cyclotomic& x, int e) {
  Cyclotomic out(x.conductor(), Rational(1));
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

Cyclotomic eis_constant_term(const EisIndex& raw) {
  const EisIndex idx = raw.normalized();
  const int k = idx.weight;
  const int n = idx.level;
  if (idx.c1 == 0 && idx.c2 == 0) {
    if (k % 2 == 1) return Cyclotomic(n);
    return Cyclotomic(n, -bernoulli(k) / k);
  }
  if (idx.c1 != 0) {
    if (k >= 2) return Cyclotomic(n);
    return Cyclotomic(n, Rational(1, 2) - make_rational(idx.c1, n));
  }
  // c1 = 0: sum over b = c2/N + Z of b^-k, through the cotangent at pi c2/N.
  const int big = static_cast<int>(lcm_long(4, n));
  const Cyclotomic i_unit = Cyclotomic::zeta(big, big / 4);
  const Cyclotomic z = Cyclotomic::zeta(big, static_cast<long>(big / n) * idx.c2);
  const Cyclotomic one(big, Rational(1));
  const Cyclotomic t = i_unit * (z + one) / (z - one);
  const std::vector<Rational> poly = cot_polynomial(k - 1);
  Cyclotomic value(big);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * t + Cyclotomic(big, *it);
  if ((k - 1) % 2 == 1) value = -value;
  const Cyclotomic minus_two_i = i_unit * Rational(-2);
  value /= cyclo_power(minus_two_i, k);
  auto restricted = value.restrict_to(n);
  if (!restricted) throw Error("constant term escaped Q(zeta_N)");
  return *restricted;
}

namespace {

QuasiForm compute_series(const EisIndex& idx, int bound) {
  const int k = idx.weight;
  const int n = idx.level;
  std::vector<std::vector<Integer>> raw(bound + 1, std::vector<Integer>(n));
  std::vector<Integer> powers(bound + 1);
  for (int m = 1; m <= bound; ++m) mpz_pow_ui(powers[m].get_mpz_t(), Integer(m).get_mpz_t(), k - 1);

  // rows a = (c1 + jN)/N > 0 contribute m^(k-1) zeta^(m c2) at m (c1 + jN)
  for (int e = idx.c1 == 0 ? n : idx.c1; e <= bound; e += n) {
    for (int m = 1; m * e <= bound; ++m) raw[m * e][mod_floor(static_cast<long>(m) * idx.c2, n)] += powers[m];
  }
  // rows a < 0 contribute (-1)^k m^(k-1) zeta^(-m c2) at m |a| N
  const int first_neg = idx.c1 == 0 ? n : n - idx.c1;
  const bool odd = k % 2 == 1;
  for (int e = first_neg; e <= bound; e += n) {
    for (int m = 1; m * e <= bound; ++m) {
      auto& slot = raw[m * e][mod_floor(-static_cast<long>(m) * idx.c2, n)];
      if (odd) {
        slot -= powers[m];
      } else {
        slot += powers[m];
      }
    }
  }

  QSeries hol(n, bound);
  hol.set(0, eis_constant_term(idx));
  std::vector<Rational> coeffs(n);
  for (int e = 1; e <= bound; ++e) {
    bool any = false;
    for (int j = 0; j < n; ++j) {
      coeffs[j] = Rational(raw[e][j]);
      any = any || raw[e][j] != 0;
    }
    if (any) hol.set(e, Cyclotomic::reduce(n, coeffs));
  }
  if (k != 2) return QuasiForm::holomorphic(k, std::move(hol));
  QSeries y(n, bound);
  y.set(0, Cyclotomic(n, Rational(1)));
  return QuasiForm(k, {std::move(hol), std::move(y)});
}

using MemoKey = std::tuple<int, int, int, int, int>;

std::shared_mutex memo_mutex;
std::map<MemoKey, std::shared_ptr<const QuasiForm>> memo;

}  // namespace

QuasiForm eis_series(const EisIndex& raw, int truncation) {
  const EisIndex idx = raw.normalized();
  if (truncation < 1) throw Error("truncation must be at least 1");
  const MemoKey key{idx.weight, idx.level, idx.c1, idx.c2, truncation};
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_shared<const QuasiForm>(compute_series(idx, truncation));
  std::unique_lock lock(memo_mutex);
  memo.emplace(key, value);
  return *value;
}

int sturm_bound(int k, int n) {
  if (n < 1 || k < 1) throw Error("sturm_bound needs k >= 1 and N >= 1");
  long mu;
  if (n == 1) {
    mu = 1;
  } else if (n == 2) {
    mu = 6;
  } else {
    long num = static_cast<long>(n) * n * n;
    long m = n;
    for (long p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      while (m % p == 0) m /= p;
      num = num / (p * p) * (p * p - 1);
    }
    mu = num / 2;
  }
  const long steps = (static_cast<long>(k) * mu + 11) / 12 + 1;
  return static_cast<int>(n * steps);
}

Real s_transform_defect(const EisIndex& raw, int truncation) {
  const EisIndex idx = raw.normalized();
  const EisIndex swapped{idx.weight, idx.level, idx.c2, -idx.c1};
  PrecisionGuard guard(default_digits());
  EvalPoint at_i(ComplexApprox(Real(0), Real(1)));
  ComplexApprox lhs = eval_at(eis_series(idx, truncation), at_i);
  ComplexApprox rhs = i_power(idx.weight) * eval_at(eis_series(swapped, truncation), at_i);
  return (lhs - rhs).abs();
}

bool check_s_transform(const EisIndex& idx, int truncation, const Rational& tol) {
  PrecisionGuard guard(default_digits());
  return s_transform_defect(idx, truncation) < real_from(tol);
}

void write_series_csv(std::ostream& os, const EisIndex& raw, const QuasiForm& f) {
  const EisIndex idx = raw.normalized();
  os << "level,weight,c1,c2,truncation,Ydepth\n";
  os << f.level() << ',' << f.weight() << ',' << idx.c1 << ',' << idx.c2 << ',' << f.truncation() << ','
     << f.depth() << '\n';
  for (int j = 0; j <= f.depth(); ++j) {
    os << "Y^" << j << '\n';
    for (int e : f.component(j).nonzero_exponents()) {
      os << e << ", " << f.component(j)[e].to_string() << '\n';
    }
  }
}

}  // namespace eisenlab

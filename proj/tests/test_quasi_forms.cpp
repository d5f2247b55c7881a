#include <gtest/gtest.h>

#include <random>

#include "eisenlab/certifier.hpp"
#include "eisenlab/errors.hpp"

using namespace eisenlab;

namespace {

Cyclotomic rat(int n, long num, long den = 1) { return Cyclotomic(n, make_rational(num, den)); }

QSeries constant_series(int n, int b, const Cyclotomic& c) {
  QSeries s(n, b);
  s.set(0, c);
  return s;
}

QuasiForm y_power(int weight, int n, int b, int j) {
  std::vector<QSeries> comps(j + 1, QSeries(n, b));
  comps[j].set(0, rat(n, 1));
  return QuasiForm(weight, comps);
}

// sum coefficients * basis + residual
QuasiForm reassemble(const SpanSolution& sol, const QuasiForm& like) {
  QuasiForm acc = QuasiForm::zero(like.weight(), like.level(), like.truncation());
  for (const auto& c : sol.coefficients) acc += eis_series(c.index, like.truncation()) * c.value;
  return acc + sol.residual;
}

ComplexApprox at(const QuasiForm& f, const Real& y) { return eval_at(f, EvalPoint(ComplexApprox(Real(0), y))); }

}  // namespace

TEST(QuasiForm, ProductIsPolynomialInY) {
  const int n = 3, b = 6;
  Cyclotomic a = Cyclotomic::zeta(3), c = rat(3, 5, 7);
  QuasiForm fa = QuasiForm(1, {constant_series(n, b, a), constant_series(n, b, rat(n, 1))});
  QuasiForm fb = QuasiForm(1, {constant_series(n, b, c), constant_series(n, b, rat(n, 1))});
  QuasiForm prod = quasi_mul(fa, fb);
  ASSERT_EQ(prod.depth(), 2);
  EXPECT_EQ(prod.weight(), 2);
  EXPECT_EQ(prod.component(0)[0], a * c);
  EXPECT_EQ(prod.component(1)[0], a + c);
  EXPECT_EQ(prod.component(2)[0], rat(n, 1));

  QuasiForm one = QuasiForm::holomorphic(0, constant_series(n, b, rat(n, 1)));
  QuasiForm e = eis_series({2, 3, 1, 2}, b);
  EXPECT_EQ(quasi_mul(e, one), e);
  EXPECT_THROW(quasi_mul(y_power(0, n, b, 2), y_power(0, n, b, 1)), DepthOverflow);
}

TEST(QuasiForm, WeightOneProductConstantTerm) {
  QuasiForm f = eis_series({1, 5, 1, 2}, 50), g = eis_series({1, 5, 0, 3}, 50);
  QuasiForm h = quasi_mul(f, g);
  EXPECT_EQ(h.component(0)[0], f.component(0)[0] * g.component(0)[0]);
}

TEST(QuasiForm, ThetaExamples) {
  QSeries s(5, 8);
  s.set(3, rat(5, 1));
  QuasiForm t = theta(QuasiForm::holomorphic(0, s));
  EXPECT_EQ(t.component(0).nonzero_exponents(), std::vector<int>{3});
  EXPECT_EQ(t.component(0)[3], rat(5, 3, 5));
  EXPECT_TRUE(theta(QuasiForm::holomorphic(0, constant_series(5, 8, rat(5, 7)))).is_zero());
  EXPECT_EQ(theta(y_power(0, 5, 8, 1)), y_power(2, 5, 8, 2));
  EXPECT_THROW(theta(y_power(0, 5, 8, 2)), DepthOverflow);
}

TEST(QuasiForm, ThetaMatchesFiniteDifferences) {
  PrecisionGuard guard(60);
  const Real y0(1), h("1e-12");
  const Real pi = pi_real();

  // holomorphic f: theta f = (2 pi i)^-1 f' and d/dy f(iy) = i f'
  QuasiForm f = eis_series({3, 5, 1, 2}, 300);
  ComplexApprox fd = (at(f, y0 + h) - at(f, y0 - h)) * (1 / (2 * h));
  ComplexApprox expected = fd * (-1 / (2 * pi));
  ComplexApprox got = at(theta(f), y0);
  EXPECT_LT((got - expected).abs() / got.abs(), Real("1e-8"));

  // Y depends on y alone: theta Y = -(1/(4 pi)) dY/dy
  QuasiForm y = y_power(0, 1, 4, 1);
  ComplexApprox fy = (at(y, y0 + h) - at(y, y0 - h)) * (1 / (2 * h));
  ComplexApprox got_y = at(theta(y), y0);
  EXPECT_LT((got_y - fy * (-1 / (4 * pi))).abs() / got_y.abs(), Real("1e-8"));
}

TEST(QuasiForm, DeltaExamples) {
  const int n = 4, b = 12;
  EXPECT_TRUE(delta(QuasiForm::holomorphic(0, constant_series(n, b, rat(n, 1)))).is_zero());

  QSeries h = eis_series({2, n, 1, 3}, b).component(0);
  QuasiForm completed(2, {h, constant_series(n, b, rat(n, 1))});
  QuasiForm expected(4, {h.theta(), h * rat(n, -2), constant_series(n, b, rat(n, -1))});
  EXPECT_EQ(delta(completed), expected);

  QuasiForm e1 = eis_series({1, 5, 2, 1}, 20);
  QuasiForm d = delta(e1);
  EXPECT_EQ(d.weight(), 3);
  EXPECT_EQ(d.component(1), -e1.component(0));
}

TEST(QuasiForm, LeibnizRule) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 40) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    int k1 = std::uniform_int_distribution<int>(1, 5)(rng);
    int k2 = std::uniform_int_distribution<int>(1, 6 - k1)(rng);
    if (k1 == 2 && k2 == 2) continue;
    std::uniform_int_distribution<int> c(0, n - 1);
    QuasiForm f = eis_series({k1, n, c(rng), c(rng)}, 3 * n);
    QuasiForm g = eis_series({k2, n, c(rng), c(rng)}, 3 * n);
    EXPECT_EQ(delta(quasi_mul(f, g)), quasi_mul(delta(f), g) + quasi_mul(f, delta(g)));
    ++checked;
  }
}

TEST(EisBasis, Examples) {
  EisBasis b2 = eis_basis(2, 1, 10);
  ASSERT_EQ(b2.elements.size(), 1u);
  EXPECT_EQ(b2.elements[0].second.depth(), 1);
  EXPECT_EQ(b2.elements[0].second.component(0)[0], rat(1, -1, 12));
  EXPECT_EQ(b2.elements[0].second.component(0)[1], rat(1, 2));

  // weight 1 at level 2 vanishes identically: lambda = -lambda and the series is odd
  EXPECT_TRUE(eis_basis(1, 2, 10).elements.empty());
  EisBasis b1 = eis_basis(1, 3, 10);
  ASSERT_EQ(b1.elements.size(), 8u);
  EXPECT_EQ(b1.elements[0].first, (EisIndex{1, 3, 0, 1}));

  EXPECT_TRUE(eis_basis(3, 1, 10).elements.empty());
}

TEST(SpanSolve, Trivial) {
  const int b = sturm_bound(3, 5);
  EisBasis basis = eis_basis(3, 5, b);
  SpanSolution s = span_solve(basis.elements[0].second, basis);
  EXPECT_TRUE(s.in_span());
  ASSERT_EQ(s.coefficients.size(), 1u);
  EXPECT_EQ(s.coefficients[0].index, basis.elements[0].first);
  EXPECT_EQ(s.coefficients[0].value, rat(5, 1));

  SpanSolution z = span_solve(QuasiForm::zero(3, 5, b), basis);
  EXPECT_TRUE(z.in_span());
  EXPECT_TRUE(z.coefficients.empty());
}

TEST(SpanSolve, LevelOneFormAtLevelFive) {
  const int b = sturm_bound(4, 5);
  ASSERT_EQ(b % 5, 0);
  QuasiForm e4 = eis_series({4, 1, 0, 0}, b / 5).rescaled(5);
  SpanSolution s = eis_solver(4, 5, b)->solve(e4);
  EXPECT_TRUE(s.in_span());
  EXPECT_EQ(reassemble(s, e4), e4);
}

TEST(SpanSolve, RankMatchesCuspCount) {
  // Gamma(5) has 12 cusps, all regular
  EXPECT_EQ(eis_solver(3, 5, sturm_bound(3, 5))->rank(), 12);
  EXPECT_EQ(eis_solver(4, 5, sturm_bound(4, 5))->rank(), 12);
  EXPECT_EQ(eis_solver(1, 5, sturm_bound(1, 5))->rank(), 6);
  // 11 holomorphic combinations plus the completed part
  EXPECT_EQ(eis_solver(2, 5, sturm_bound(2, 5))->rank(), 12);
}

TEST(SpanSolve, Soundness) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int k = std::uniform_int_distribution<int>(1, 4)(rng);
    int b = sturm_bound(k, n);
    auto solver = eis_solver(k, n, b);
    QuasiForm target = QuasiForm::zero(k, n, b);
    for (const auto& [idx, f] : solver->basis().elements) {
      target += f * Cyclotomic(n, make_rational(std::uniform_int_distribution<int>(-3, 3)(rng), 1));
    }
    // knock one coefficient to leave the span
    QSeries bump(n, b);
    bump.set(1, rat(n, 1));
    QuasiForm off = target + QuasiForm(k, {bump});
    SpanSolution s1 = solver->solve(target);
    SpanSolution s2 = solver->solve(off);
    EXPECT_TRUE(s1.in_span());
    EXPECT_EQ(reassemble(s1, target), target);
    EXPECT_EQ(reassemble(s2, off), off);
  }
  // X(7) has genus 3, so a single product of weight-1 series leaves a cuspidal residual;
  // X(5) has genus 0 and there every weight-2 form is Eisenstein
  const int b7 = sturm_bound(2, 7);
  Certification c = certify_orthogonal(quasi_mul(eis_series({1, 7, 1, 2}, b7), eis_series({1, 7, 3, 1}, b7)));
  EXPECT_FALSE(c.verified());
  EXPECT_FALSE(c.solution.residual_exponents().empty());
  EXPECT_TRUE(certify_orthogonal(quasi_mul(eis_series({1, 5, 1, 2}, 55), eis_series({1, 5, 2, 1}, 55))).verified());
}

TEST(Peel, HolomorphicAndDeltaImages) {
  const int b = sturm_bound(3, 5);
  QuasiForm f = eis_series({3, 5, 1, 4}, b);
  PeelResult p = peel(f);
  EXPECT_EQ(p.remainder, f.component(0));
  EXPECT_TRUE(p.certificate.empty());

  QuasiForm d = delta(eis_series({1, 5, 2, 3}, b));
  PeelResult q = peel(d);
  EXPECT_TRUE(q.remainder.is_zero());
  QuasiForm rebuilt = QuasiForm::holomorphic(3, q.remainder);
  for (const auto& e : q.certificate) rebuilt += e.generator * e.scale;
  EXPECT_EQ(rebuilt, d);
}

TEST(Peel, DepthTwoAtWeightFour) {
  const int b = sturm_bound(4, 2);
  QuasiForm f = quasi_mul(eis_series({2, 2, 0, 1}, b), eis_series({2, 2, 1, 0}, b));
  ASSERT_EQ(f.depth(), 2);
  PeelResult p = peel(f);
  ASSERT_FALSE(p.certificate.empty());
  EXPECT_EQ(p.certificate.front().generator.depth(), 2);
  QuasiForm rebuilt = QuasiForm::holomorphic(4, p.remainder);
  for (const auto& e : p.certificate) rebuilt += e.generator * e.scale;
  EXPECT_EQ(rebuilt, f);
  EXPECT_TRUE(certify_orthogonal(f).verified());
}

TEST(Peel, Errors) {
  const int b = 20;
  EXPECT_THROW(peel(eis_series({2, 3, 1, 1}, b)), UnsupportedWeight);
  EXPECT_THROW(peel(y_power(5, 3, b, 2)), UnsupportedWeight);
  QSeries lone(3, b);
  lone.set(1, rat(3, 1));
  try {
    peel(QuasiForm(3, {QSeries(3, b), lone}));
    FAIL() << "expected TopComponentNotEisenstein";
  } catch (const TopComponentNotEisenstein& e) {
    EXPECT_EQ(e.y_degree(), 1);
    EXPECT_FALSE(e.residual_exponents().empty());
  }
  std::vector<QSeries> comps(3, QSeries(3, b));
  comps[2] = lone;
  EXPECT_THROW(peel(QuasiForm(4, comps)), TopComponentNotEisenstein);
}

TEST(Certify, SingleEisensteinSeries) {
  for (int k = 1; k <= 5; ++k) {
    const int b = sturm_bound(k, 3);
    Certification c = certify_orthogonal(eis_series({k, 3, 1, 2}, b));
    EXPECT_TRUE(c.verified()) << k;
    EXPECT_FALSE(c.solution.coefficients.empty());
  }
}

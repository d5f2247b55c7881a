#include <gtest/gtest.h>

#include <random>

#include "eisenlab/errors.hpp"
#include "eisenlab/verifiers.hpp"

using namespace eisenlab;

namespace {

TorsionPoint tp(int c1, int c2, int m) { return TorsionPoint{m, c1, c2}.normalized(); }

}  // namespace

TEST(TorsionPoint, ParseArithmetic) {
  TorsionPoint t = TorsionPoint::parse("1,2@5");
  EXPECT_EQ(t.denominator, 5);
  EXPECT_EQ(t.c1, 1);
  EXPECT_EQ(t.c2, 2);
  EXPECT_EQ(t.to_string(), "1,2@5");
  EXPECT_EQ(TorsionPoint::parse("-1,7@5").to_string(), "4,2@5");
  EXPECT_EQ(-t, tp(4, 3, 5));
  EXPECT_EQ(tp(1, 0, 2) + tp(0, 1, 3), tp(3, 2, 6));
  EXPECT_TRUE((tp(1, 1, 2) + tp(1, 1, 2)).is_zero());
  EXPECT_EQ(tp(1, 0, 2), tp(2, 0, 4));
  EXPECT_EQ(tp(1, 2, 5).index(3, 10), (EisIndex{3, 10, 2, 4}));
  EXPECT_THROW(tp(1, 2, 5).index(3, 6), NotDivisible);
  EXPECT_THROW(TorsionPoint::parse("1,2"), ParseError);
  EXPECT_THROW(TorsionPoint::parse("1,x@5"), ParseError);
  EXPECT_THROW(TorsionPoint::parse("1,2@0"), ParseError);
}

TEST(BuildL, Examples) {
  const int b = 20;
  TorsionPoint lam = tp(1, 2, 5), mu = tp(3, 1, 5);
  QuasiForm l2 = build_L({lam, mu, Rational(7), Rational(-3), 2}, 5, b);
  EXPECT_EQ(l2, quasi_mul(eis_series({1, 5, 1, 2}, b), eis_series({1, 5, 3, 1}, b)));
  EXPECT_EQ(l2, build_L({lam, mu, Rational(1), Rational(1), 2}, 5, b));

  // q = 0 keeps only m = 1, i.e. the E_2 E_1 term
  QuasiForm l3 = build_L({lam, mu, Rational(1), Rational(0), 3}, 5, b);
  EXPECT_EQ(l3, quasi_mul(eis_series({2, 5, 1, 2}, b), eis_series({1, 5, 3, 1}, b)));

  QuasiForm l4 = build_L({tp(0, 0, 1), tp(0, 0, 1), Rational(1), Rational(1), 4}, 1, 6);
  ASSERT_EQ(l4.depth(), 2);
  EXPECT_EQ(l4.component(2)[0], Cyclotomic(1, Rational(1)));
  EXPECT_EQ(l4.component(2).nonzero_exponents(), std::vector<int>{0});
}

TEST(BuildL, ScaleCovariance) {
  const int b = 15, n = 3;
  TorsionPoint lam = tp(1, 0, 3), mu = tp(1, 1, 3);
  for (int k = 2; k <= 5; ++k) {
    const Rational t(2, 3);
    QuasiForm scaled = build_L({lam, mu, t * 1, t * -2, k}, n, b);
    QuasiForm base = build_L({lam, mu, Rational(1), Rational(-2), k}, n, b);
    Rational factor(1);
    for (int i = 0; i < k - 2; ++i) factor *= t;
    EXPECT_EQ(scaled, base * Cyclotomic(n, factor)) << k;
  }
  // no E_2 factor survives: p = 0 leaves only l = 1, m = 4
  EXPECT_EQ(build_L({lam, mu, Rational(0), Rational(1), 5}, n, b).depth(), 0);
  EXPECT_EQ(build_L({lam, mu, Rational(1), Rational(1), 5}, n, b).depth(), 1);
}

TEST(TwoTerm, ExactZero) {
  VerificationReport r = verify_two_term(tp(1, 2, 5), tp(2, 1, 5), 5);
  EXPECT_EQ(r.status, Status::Verified);
  EXPECT_TRUE(r.residual_exponents.empty());
  EXPECT_EQ(r.level, 5);
  EXPECT_EQ(r.truncation, sturm_bound(2, 5));
  EXPECT_EQ(verify_two_term(tp(1, 0, 2), tp(1, 1, 2), 2).status, Status::Verified);
  EXPECT_EQ(verify_two_term(tp(0, 0, 1), tp(1, 1, 3), 3).status, Status::Verified);
}

TEST(ThreeTerm, VerifiedWithNonzeroDefect) {
  VerificationReport r = verify_three_term_w2(tp(1, 0, 5), tp(0, 1, 5), 5);
  EXPECT_EQ(r.status, Status::Verified);
  EXPECT_FALSE(r.coefficients.empty());
  EXPECT_FALSE(three_term_sum(tp(1, 0, 5), tp(0, 1, 5), 5, r.truncation).is_zero());

  EXPECT_EQ(verify_three_term_w2(tp(1, 0, 3), tp(1, 1, 3), 3).status, Status::Verified);
  // a vanishing torsion point is reported inconclusive by policy
  VerificationReport d = verify_three_term_w2(tp(1, 0, 3), tp(2, 0, 3), 3);
  EXPECT_EQ(d.status, Status::Inconclusive);
  EXPECT_FALSE(d.note.empty());
}

TEST(Prop21, WeightTwoMatchesThreeTerm) {
  TorsionPoint lam = tp(1, 2, 5), mu = tp(2, 2, 5);
  VerificationReport a = verify_three_term_w2(lam, mu, 5);
  VerificationReport b = verify_prop21({lam, mu, Rational(3), Rational(-1), 2}, 5);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.truncation, b.truncation);
  ASSERT_EQ(a.coefficients.size(), b.coefficients.size());
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    EXPECT_EQ(a.coefficients[i].index, b.coefficients[i].index);
    EXPECT_EQ(a.coefficients[i].value, b.coefficients[i].value);
  }
}

TEST(Prop21, HigherWeights) {
  VerificationReport r3 = verify_prop21({tp(1, 0, 3), tp(0, 1, 3), Rational(1), Rational(1), 3}, 3);
  EXPECT_EQ(r3.status, Status::Verified) << r3.note;
  VerificationReport r4 = verify_prop21({tp(1, 0, 2), tp(0, 1, 2), Rational(2), Rational(-1), 4}, 2);
  EXPECT_EQ(r4.status, Status::Verified) << r4.note;
  bool depth_two = false;
  for (const auto& e : r4.certificate) depth_two = depth_two || e.generator.depth() == 2;
  EXPECT_TRUE(depth_two);
}

TEST(Hecke, LevelFiveInstanceAndSmallLevels) {
  const TorsionPoint zero = tp(0, 0, 1);
  VerificationReport r = verify_hecke_trace(5, 3, {zero, zero, Rational(1), Rational(1), 2});
  EXPECT_EQ(r.status, Status::Verified) << r.note;
  EXPECT_EQ(r.level, 5);

  VerificationReport r2 = verify_hecke_trace(2, 1, {tp(1, 0, 2), tp(0, 1, 2), Rational(1), Rational(1), 2});
  EXPECT_EQ(r2.status, Status::Verified) << r2.note;
  EXPECT_EQ(r2.level, 4);
  EXPECT_THROW(verify_hecke_trace(6, 2, {zero, zero, Rational(1), Rational(1), 2}), NonCoprimeShear);
}

TEST(Hecke, SidesAreModularAtI) {
  // both sides transform under S at z = i: F_{lam,mu}(i) = i^k F_{lam S, mu S}(i)
  PrecisionGuard guard(40);
  const EvalPoint at_i(ComplexApprox(Real(0), Real(1)));
  auto swap = [](const TorsionPoint& t) { return TorsionPoint{t.denominator, t.c2, -t.c1}.normalized(); };
  for (int k = 2; k <= 3; ++k) {
    // 3-torsion inputs: weight-1 series at 2-torsion points vanish and would make this vacuous
    TorsionPoint lam = tp(1, 0, 3), mu = tp(1, 2, 3);
    auto [lhs, rhs] = hecke_sides(2, 1, {lam, mu, Rational(1), Rational(2), k}, 240);
    auto [lhs_s, rhs_s] = hecke_sides(2, 1, {swap(lam), swap(mu), Rational(1), Rational(2), k}, 240);
    EXPECT_LT((eval_at(lhs, at_i) - i_power(k) * eval_at(lhs_s, at_i)).abs(), Real("1e-8")) << k;
    EXPECT_LT((eval_at(rhs, at_i) - i_power(k) * eval_at(rhs_s, at_i)).abs(), Real("1e-8")) << k;
    EXPECT_FALSE(lhs.is_zero());
    EXPECT_FALSE(rhs.is_zero());
  }
}

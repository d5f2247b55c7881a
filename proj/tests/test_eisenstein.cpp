#include <gtest/gtest.h>

#include <complex>
#include <sstream>

#include "eisenlab/eisenstein.hpp"
#include "eisenlab/errors.hpp"

using namespace eisenlab;

namespace {

long divisor_power_sum(long n, int power) {
  long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    long t = 1;
    for (int i = 0; i < power; ++i) t *= d;
    s += t;
  }
  return s;
}

Cyclotomic rat(int n, long num, long den = 1) { return Cyclotomic(n, make_rational(num, den)); }

}  // namespace

TEST(EisSeries, ClassicalWeightFourAgainstDivisorSums) {
  QuasiForm e4 = eis_series({4, 1, 0, 0}, 60);
  EXPECT_EQ(e4.depth(), 0);
  EXPECT_EQ(e4.component(0)[0], rat(1, 1, 120));
  EXPECT_EQ(e4.component(0)[1], rat(1, 2));
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(e4.component(0)[n], rat(1, 2 * divisor_power_sum(n, 3))) << n;
}

TEST(EisSeries, ClassicalWeightTwoWithYComponent) {
  QuasiForm e2 = eis_series({2, 1, 0, 0}, 60);
  ASSERT_EQ(e2.depth(), 1);
  EXPECT_EQ(e2.component(0)[0], rat(1, -1, 12));
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(e2.component(0)[n], rat(1, 2 * divisor_power_sum(n, 1))) << n;
  EXPECT_EQ(e2.component(1).nonzero_exponents(), std::vector<int>{0});
  EXPECT_EQ(e2.component(1)[0], rat(1, 1));
}

TEST(EisSeries, WeightOneConstantTerms) {
  EXPECT_TRUE(eis_constant_term({1, 2, 0, 1}).is_zero());
  for (int n = 2; n <= 9; ++n) {
    for (int c = 1; c < n; ++c) {
      Cyclotomic z = Cyclotomic::zeta(n, c);
      Cyclotomic expected = (rat(n, 1) + z) / (rat(n, 1) - z) * make_rational(1, 2);
      EXPECT_EQ(eis_constant_term({1, n, 0, c}), expected) << n << "," << c;
      // branch (iv) is odd under lambda -> -lambda
      EXPECT_EQ(eis_constant_term({1, n, c, 0}), -eis_constant_term({1, n, n - c, 0}));
    }
  }
}

TEST(EisSeries, ConstantTermsLieInTheRightField) {
  for (int k = 1; k <= 8; ++k) {
    for (int n = 1; n <= 8; ++n) {
      for (int c = 0; c < n; ++c) EXPECT_EQ(eis_constant_term({k, n, 0, c}).conductor(), n);
    }
  }
  // t = cot(pi/4) = 1: weight 2 constant is sum_{b in 1/4 + Z} b^-2 normalized = -(1/(-2i)^2) P_1(1) = -1/2
  EXPECT_EQ(eis_constant_term({2, 4, 0, 1}), rat(4, -1, 2));
}

TEST(EisSeries, Parity) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 6; ++n) {
      const Cyclotomic sign(n, Rational(k % 2 ? -1 : 1));
      for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = 0; c2 < n; ++c2) {
          QuasiForm f = eis_series({k, n, c1, c2}, 4 * n);
          QuasiForm g = eis_series({k, n, -c1, -c2}, 4 * n);
          EXPECT_EQ(g, f * sign) << k << " " << n << " " << c1 << " " << c2;
        }
      }
    }
  }
}

TEST(EisSeries, LatticeSumOracleWeightFour) {
  PrecisionGuard guard(60);
  QuasiForm e4 = eis_series({4, 1, 0, 0}, 60);
  ComplexApprox value = eval_at(e4, EvalPoint(ComplexApprox(Real(0), Real(1))));

  const long r = 800;
  long double sum = 0;
  for (long m = -r; m <= r; ++m) {
    for (long n = -r; n <= r; ++n) {
      if (!m && !n) continue;
      std::complex<long double> w(n, m);
      sum += std::real(1.0L / (w * w * w * w));
    }
  }
  const long double two_pi = 2 * 3.14159265358979323846264338327950288L;
  const long double oracle = sum * 6 / (two_pi * two_pi * two_pi * two_pi);
  EXPECT_NEAR(static_cast<double>(value.re), static_cast<double>(oracle), 1e-8);
  EXPECT_LT(abs(value.im), Real("1e-50"));
}

TEST(EisSeries, RescaleLevelKeepsValues) {
  PrecisionGuard guard(60);
  QuasiForm f = eis_series({3, 3, 1, 2}, 40);
  QuasiForm g = f.rescaled(15);
  EXPECT_EQ(g.truncation(), 200);
  EvalPoint z(ComplexApprox(Real(0), Real(2)));
  EXPECT_LT((eval_at(f, z) - eval_at(g, z)).abs(), Real("1e-40"));

  QSeries q1(1, 3);
  q1.set(1, rat(1, 1));
  QSeries q5 = rescale_level(q1, 5);
  EXPECT_EQ(q5.nonzero_exponents(), std::vector<int>{5});
  EXPECT_EQ(q5[5], rat(5, 1));
  EXPECT_EQ(rescale_level(q5, 5), q5);
  EXPECT_THROW(rescale_level(q5, 7), NotDivisible);
}

TEST(EisSeries, TruncationMonotonicity) {
  for (int k = 1; k <= 4; ++k) {
    QuasiForm small = eis_series({k, 5, 2, 3}, 25);
    QuasiForm large = eis_series({k, 5, 2, 3}, 80);
    EXPECT_EQ(large.truncated(25), small);
  }
}

TEST(EisSeries, PositiveCoefficientsAreIntegral) {
  for (int k = 1; k <= 4; ++k) {
    QuasiForm f = eis_series({k, 6, 1, 5}, 60);
    for (int n = 1; n <= 60; ++n) {
      for (const auto& c : f.component(0)[n].coeffs()) EXPECT_EQ(c.get_den(), 1);
    }
  }
}

TEST(EisSeries, STransformExamples) {
  EXPECT_TRUE(check_s_transform({3, 5, 1, 2}, 200, make_rational(1, 10000000000L)));
  EXPECT_TRUE(check_s_transform({4, 1, 0, 0}, 40, make_rational(1, 10000000000L)));
  EXPECT_TRUE(check_s_transform({1, 3, 0, 1}, 120, make_rational(1, 10000000000L)));
  EXPECT_TRUE(check_s_transform({2, 1, 0, 0}, 40, make_rational(1, 10000000000L)));
}

TEST(EisSeries, STransformEveryIndexSmallLevels) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 5; ++n) {
      for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = 0; c2 < n; ++c2) {
          EXPECT_LT(s_transform_defect({k, n, c1, c2}, 40 * n), Real("1e-10"))
              << k << " " << n << " " << c1 << " " << c2;
        }
      }
    }
  }
}

TEST(EisSeries, SturmBound) {
  EXPECT_EQ(sturm_bound(4, 1), 2);
  EXPECT_EQ(sturm_bound(12, 1), 2);
  EXPECT_EQ(sturm_bound(13, 1), 3);
  EXPECT_EQ(sturm_bound(2, 2), 4);
  EXPECT_EQ(sturm_bound(2, 5), 55);
  EXPECT_EQ(sturm_bound(3, 10), 910);
}

TEST(EisSeries, CsvDump) {
  std::ostringstream os;
  write_series_csv(os, {2, 1, 0, 0}, eis_series({2, 1, 0, 0}, 2));
  EXPECT_EQ(os.str(),
            "level,weight,c1,c2,truncation,Ydepth\n1,2,0,0,2,1\nY^0\n0, -1/12 | 1\n1, 2/1 | 1\n2, 6/1 | 1\n"
            "Y^1\n0, 1/1 | 1\n");
}

TEST(EisSeries, Errors) {
  EXPECT_THROW(eis_series({0, 1, 0, 0}, 5), InvalidIndex);
  EXPECT_THROW(eis_series({2, 0, 0, 0}, 5), InvalidIndex);
  EXPECT_THROW(check_s_transform({0, 3, 0, 1}, 5, Rational(1)), InvalidIndex);
}

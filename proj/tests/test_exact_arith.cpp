#include <gtest/gtest.h>

#include <random>

#include "eisenlab/cyclotomic.hpp"
#include "eisenlab/errors.hpp"

using namespace eisenlab;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), len(1, 2 * n + 1);
  std::vector<Rational> raw(len(rng));
  for (auto& c : raw) c = make_rational(num(rng), den(rng));
  return Cyclotomic::reduce(n, raw);
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Real tolerance(int digits) { return pow(Real(10), 5 - digits); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/-4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_EQ(to_string(make_rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, Bernoulli) {
  EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  EXPECT_EQ(bernoulli(7), Rational(0));
}

TEST(CycloPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(7), 6);
}

TEST(CycloReduce, Examples) {
  auto r4 = cyclo_reduce(4, ints({0, 0, 1}));
  EXPECT_EQ(r4, Cyclotomic(4, Rational(-1)));

  auto r5 = cyclo_reduce(5, ints({0, 0, 0, 0, 1}));
  EXPECT_EQ(r5.coeffs(), ints({-1, -1, -1, -1}));

  auto r1 = cyclo_reduce(1, ints({0, 0, 0, 7}));
  EXPECT_EQ(r1, Cyclotomic(1, Rational(7)));
}

TEST(CycloReduce, ZetaToTheNIsOneAndPhiVanishes) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<Rational> raw(n + 1, Rational(0));
    raw[n] = 1;
    EXPECT_TRUE(cyclo_reduce(n, raw).is_one()) << n;
    const auto& phi = cyclotomic_polynomial(n);
    std::vector<Rational> praw(phi.begin(), phi.end());
    EXPECT_TRUE(cyclo_reduce(n, praw).is_zero()) << n;
  }
}

TEST(CycloReduce, IsRingHomomorphism) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> a(2 * n), b(2 * n), prod(4 * n, Rational(0));
      for (auto& c : a) c = coef(rng);
      for (auto& c : b) c = coef(rng);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
      EXPECT_EQ(cyclo_reduce(n, a) * cyclo_reduce(n, b), cyclo_reduce(n, prod));
    }
  }
}

TEST(CycloInvert, Examples) {
  auto x2 = Cyclotomic(2, Rational(1)) - Cyclotomic::zeta(2);
  EXPECT_EQ(x2, Cyclotomic(2, Rational(2)));
  EXPECT_EQ(cyclo_invert(x2), Cyclotomic(2, make_rational(1, 2)));

  auto inv_i = cyclo_invert(Cyclotomic::zeta(4));
  EXPECT_EQ(inv_i, -Cyclotomic::zeta(4));

  auto x5 = Cyclotomic(5, Rational(1)) - Cyclotomic::zeta(5);
  EXPECT_TRUE((x5 * cyclo_invert(x5)).is_one());

  EXPECT_THROW(cyclo_invert(Cyclotomic(7)), DivisionByZero);
}

TEST(CycloField, AxiomsOnRandomSamples) {
  std::mt19937 rng(2024);
  int inverted = 0;
  for (int trial = 0; inverted < 200; ++trial) {
    int n = 1 + trial % 12;
    auto a = random_cyclotomic(rng, n);
    auto b = random_cyclotomic(rng, n);
    auto c = random_cyclotomic(rng, n);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (a.is_zero()) continue;
    EXPECT_TRUE((a * cyclo_invert(a)).is_one()) << a.to_string();
    ++inverted;
  }
}

TEST(CycloEmbed, Examples) {
  auto i = cyclo_embed(Cyclotomic::zeta(4), 60);
  EXPECT_LT(abs(i.re), tolerance(60));
  EXPECT_LT(abs(i.im - 1), tolerance(60));

  auto half = cyclo_embed(Cyclotomic(1, make_rational(3, 2)), 60);
  EXPECT_EQ(half.re, Real(1.5));
  EXPECT_EQ(half.im, Real(0));

  auto s = Cyclotomic(3, Rational(1)) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2);
  EXPECT_TRUE(s.is_zero());
  EXPECT_LT(cyclo_embed(s, 60).abs(), tolerance(60));
}

TEST(CycloEmbed, HomomorphismAndConductorCompatibility) {
  std::mt19937 rng(99);
  for (int digits : {30, 60}) {
    PrecisionGuard guard(digits);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + trial % 12;
      auto a = random_cyclotomic(rng, n);
      auto b = random_cyclotomic(rng, n);
      auto lhs = (a * b).embed();
      auto rhs = a.embed() * b.embed();
      EXPECT_LT((lhs - rhs).abs(), tolerance(digits));

      int m = 1 + trial % 5;
      auto lifted = a.lift(n * m);
      EXPECT_LT((lifted.embed() - a.embed()).abs(), tolerance(digits));
      EXPECT_EQ(lifted.restrict_to(n), a);
    }
  }
}

TEST(Cyclotomic, RestrictRejectsElementsOutsideSubfield) {
  // i is not in Q(zeta_3) inside Q(zeta_12)
  auto i = Cyclotomic::zeta(12, 3);
  EXPECT_FALSE(i.restrict_to(3).has_value());
  EXPECT_TRUE(i.restrict_to(4).has_value());
}

TEST(Cyclotomic, MixedConductorsLiftToLcm) {
  auto s = Cyclotomic::zeta(4) + Cyclotomic::zeta(3);
  EXPECT_EQ(s.conductor(), 12);
  EXPECT_EQ(Cyclotomic::zeta(4), Cyclotomic::zeta(12, 3));
}

TEST(Cyclotomic, SerializationRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 12;
    auto a = random_cyclotomic(rng, n);
    EXPECT_EQ(Cyclotomic::parse(a.to_string()), a);
  }
  EXPECT_EQ(Cyclotomic::zeta(5, 2).to_string(), "0/1 + 0/1*z + 1/1*z^2 + 0/1*z^3 | 5");
  EXPECT_THROW(Cyclotomic::parse("1/2 + 3"), ParseError);
}

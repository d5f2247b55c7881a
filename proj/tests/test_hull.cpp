#include <gtest/gtest.h>

#include <algorithm>

#include "eisenlab/errors.hpp"
#include "eisenlab/hull.hpp"
#include "eisenlab/rational.hpp"

using namespace eisenlab;

namespace {

// Monotone-chain lower hull over every sublattice point in [0, N]^2, keeping
// collinear points; independent of the gift-wrapping in hull_chain.
std::vector<LatticeVector> monotone_chain_oracle(long n, long s) {
  std::vector<LatticeVector> pts;
  for (long x = 0; x <= n; ++x)
    for (long y = 0; y <= n; ++y)
      if ((x || y) && mod_floor(x - s * y, n) == 0) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  std::vector<LatticeVector> lower;
  for (const auto& pt : pts) {
    while (lower.size() >= 2) {
      const auto& o = lower[lower.size() - 2];
      const auto& a = lower.back();
      long cr = (a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x);
      if (cr < 0) {
        lower.pop_back();
      } else {
        break;
      }
    }
    lower.push_back(pt);
  }
  while (!lower.empty() && !(lower.back() == LatticeVector{n, 0})) lower.pop_back();
  std::reverse(lower.begin(), lower.end());
  return lower;
}

}  // namespace

TEST(HullChain, FiveThreeExample) {
  HullChain c = hull_chain(5, 3);
  EXPECT_EQ(c.vectors, (std::vector<LatticeVector>{{5, 0}, {3, 1}, {1, 2}, {0, 5}}));
  for (std::size_t i = 0; i + 1 < c.vectors.size(); ++i) {
    EXPECT_EQ(determinant(c.vectors[i], c.vectors[i + 1]), 5);
  }
}

TEST(HullChain, SmallCases) {
  EXPECT_EQ(hull_chain(1, 0).vectors, (std::vector<LatticeVector>{{1, 0}, {0, 1}}));
  EXPECT_EQ(hull_chain(5, 2).vectors, (std::vector<LatticeVector>{{5, 0}, {2, 1}, {1, 3}, {0, 5}}));
  EXPECT_EQ(hull_chain(5, -2).shear, 3);
  EXPECT_THROW(hull_chain(6, 2), NonCoprimeShear);
}

TEST(HullChain, InvariantsAndOracleForAllSmallLevels) {
  for (long n = 1; n <= 12; ++n) {
    for (long s = 0; s < n; ++s) {
      if (gcd_long(s, n) != 1) continue;
      HullChain c = hull_chain(n, s);
      EXPECT_TRUE(is_valid_chain(c)) << n << "," << s;
      EXPECT_EQ(c.vectors, monotone_chain_oracle(n, s)) << n << "," << s;

      // reversed and coordinate-swapped chain is the chain for the inverse shear
      std::vector<LatticeVector> mirrored;
      for (auto it = c.vectors.rbegin(); it != c.vectors.rend(); ++it) mirrored.push_back({it->y, it->x});
      EXPECT_EQ(hull_chain(n, inverse_mod(s, n)).vectors, mirrored) << n << "," << s;
    }
  }
}

TEST(HullChain, JsonRoundTrip) {
  HullChain c = hull_chain(7, 3);
  auto j = chain_to_json(c);
  EXPECT_EQ(j.dump(), "[[7,0],[3,1],[2,3],[1,5],[0,7]]");
  EXPECT_EQ(chain_vectors_from_json(j), c.vectors);
}

TEST(PairBijection, Examples) {
  EXPECT_TRUE(verify_pair_bijection(5, 3, {3, 1}, {1, 2}));
  EXPECT_TRUE(verify_pair_bijection(1, 0, {1, 0}, {0, 1}));
  EXPECT_THROW(verify_pair_bijection(5, 3, {5, 0}, {1, 2}), NotConsecutive);
  EXPECT_THROW(verify_pair_bijection(5, 3, {5, 0}, {2, 1}), NotConsecutive);
}

TEST(PairBijection, EveryConsecutivePairUpToFive) {
  for (long n = 1; n <= 5; ++n) {
    for (long s = 0; s < n; ++s) {
      if (gcd_long(s, n) != 1) continue;
      auto v = hull_chain(n, s).vectors;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        EXPECT_TRUE(verify_pair_bijection(n, s, v[i], v[i + 1])) << n << "," << s << "," << i;
      }
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "tauroot/dynkin.hpp"
#include "tauroot/root_search.hpp"

using namespace tauroot;

TEST(CycleTypePermutations, CountsAndShape) {
  EXPECT_EQ(permutations_with_cycle_length(4, 2).size(), 3u);
  EXPECT_EQ(permutations_with_cycle_length(6, 3).size(), 40u);
  EXPECT_EQ(permutations_with_cycle_length(6, 2).size(), 15u);
  EXPECT_EQ(permutations_with_cycle_length(5, 1).size(), 1u);
  EXPECT_TRUE(permutations_with_cycle_length(5, 2).empty());
  const auto ps = permutations_with_cycle_length(6, 3);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  for (const auto& p : ps)
    for (const auto& o : permutation_orbits(p)) EXPECT_EQ(o.size(), 3u);
}

TEST(FindRoots, A4SquareRootIsUpsideDown) {
  const auto roots = find_tau_roots(dynkin_quiver("A4"), 2);
  ASSERT_FALSE(roots.empty());
  const TQAutomorphism want{{3, 2, 1, 0}, {-1, 0, 1, 2}};
  EXPECT_NE(std::find(roots.begin(), roots.end(), want), roots.end());
  for (const auto& f : roots) {
    EXPECT_TRUE(oracle::pointwise_root(f, 2, -3, 3));
    EXPECT_TRUE(oracle::pointwise_autom(dynkin_quiver("A4"), f, -3, 3));
  }
}

TEST(FindRoots, EmptyCases) {
  EXPECT_TRUE(find_tau_roots(dynkin_quiver("A3"), 2).empty());
  EXPECT_TRUE(find_tau_roots(dynkin_quiver("D4"), 2).empty());
  EXPECT_TRUE(find_tau_roots(dynkin_quiver("A4"), 4).empty());
}

TEST(FindRoots, LEqualsOneIsTauInverseOnly) {
  const auto q = dynkin_quiver("D5");
  const auto roots = find_tau_roots(q, 1);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots.front(), tau_inverse_autom(5));
}

TEST(FindRoots, BoundLimitsOffsets) {
  // The A4 root needs |delta| = 2.
  EXPECT_TRUE(find_tau_roots(dynkin_quiver("A4"), 2, 1).empty());
  EXPECT_FALSE(find_tau_roots(dynkin_quiver("A4"), 2, 2).empty());
}

TEST(FindRoots, KroneckerHasSwapRoots) {
  // Two vertices with a double arrow: swap with delta (0, 1).
  ColoredQuiver q;
  q.add_vertex("a");
  q.add_vertex("b");
  q.add_arrow("a", "b", 2);
  const auto roots = find_tau_roots(q, 2);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots.front(), (TQAutomorphism{{1, 0}, {0, 1}}));
}

TEST(FindRoots, MatchesReferenceOnRandomQuivers) {
  std::mt19937 rng(20261016);
  int nonempty = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto q = oracle::random_acyclic(rng, 6, 2, 0.4);
    for (int l = 1; l <= 3; ++l) {
      const auto fast = find_tau_roots(q, l, 3);
      const auto slow = find_tau_roots_reference(q, l, 3);
      ASSERT_EQ(fast, slow) << "trial " << trial << " l=" << l;
      nonempty += fast.empty() ? 0 : 1;
    }
  }
  EXPECT_GT(nonempty, 0);
}

TEST(FindRoots, ResultIsSortedAndDeterministic) {
  ColoredQuiver q;
  for (const char* v : {"a", "b", "c", "d"}) q.add_vertex(v);
  const auto a = find_tau_roots(q, 2, 2);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, find_tau_roots(q, 2, 2));
  // 3 pairings, each pair with delta (t, 1-t), |t|, |1-t| <= 2: 4 choices per pair.
  EXPECT_EQ(a.size(), 3u * 4u * 4u);
}

#include "kerov/growth.hpp"

#include <gtest/gtest.h>

#include <map>

#include "kerov/transition.hpp"
#include "testing_util.hpp"

namespace kerov {
namespace {

TEST(Dimension, SmallCases) {
  EXPECT_EQ(dimension(Partition{}), Integer(1));
  EXPECT_EQ(dimension(Partition({1})), Integer(1));
  EXPECT_EQ(dimension(Partition({2, 1})), Integer(2));
  EXPECT_EQ(dimension(Partition({3, 2, 1})), Integer(16));  // 6!/45
}

TEST(Dimension, MatchesBruteForceTableauCount) {
  for (const auto& p : testing::partitions_up_to(8))
    EXPECT_EQ(dimension(p), testing::count_tableaux(p));
}

TEST(Dimension, StaircaseAgainstTableauOracle) {
  for (int N = 1; N <= 4; ++N)
    EXPECT_EQ(dimension(staircase(N)), testing::count_tableaux(staircase(N)));
}

TEST(Growth, EmptyAndSingle) {
  auto m = growth_probabilities(Partition{});
  ASSERT_EQ(m.atoms().size(), 1u);
  EXPECT_EQ(m.atoms()[0].location, Rational(0));
  EXPECT_EQ(m.atoms()[0].weight, Rational(1));

  auto m1 = growth_probabilities(Partition({1}));
  ASSERT_EQ(m1.atoms().size(), 2u);
  EXPECT_EQ(m1.atoms()[0].weight, Rational(1, 2));
  EXPECT_EQ(m1.atoms()[1].weight, Rational(1, 2));
}

TEST(Growth, MatchesDimensionRatioDefinition) {
  // The row/column hook cancellation must reproduce f(mu)/((n+1) f(lambda)).
  for (const auto& p : testing::partitions_up_to(9)) {
    auto probs = growth_probabilities(p);
    const Integer flam = dimension(p);
    const long long n = p.box_count();
    for (const auto& a : probs.atoms()) {
      Partition mu = add_box_at_content(p, a.location.template convert_to<long long>());
      EXPECT_EQ(a.weight, Rational(dimension(mu), flam * (n + 1)));
    }
  }
}

TEST(Growth, BranchingSumIsOne) {
  for (const auto& p : testing::partitions_up_to(10)) {
    Rational total(0);
    for (const auto& a : growth_probabilities(p).atoms()) total += a.weight;
    EXPECT_EQ(total, Rational(1));
  }
}

TEST(Growth, CoincidesWithResidueMeasure) {
  for (const auto& p : testing::partitions_up_to(9))
    EXPECT_EQ(growth_probabilities(p), transition_measure(profile_of(p)));
}

TEST(SampleGrowth, Degenerate) {
  auto t0 = sample_growth(0, 5);
  ASSERT_EQ(t0.size(), 1u);
  EXPECT_TRUE(t0[0].empty());
  auto t1 = sample_growth(1, 99);
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1[1], Partition({1}));
}

TEST(SampleGrowth, DeterministicInSeed) {
  EXPECT_EQ(sample_growth(40, 1234).back(), sample_growth(40, 1234).back());
}

TEST(SampleGrowth, StepTwoFrequencies) {
  // At the second step the chain picks (2) or (1,1) with probability 1/2.
  int rows = 0;
  const int trials = 10000;
  for (int s = 1; s <= trials; ++s) {
    auto traj = sample_growth(2, static_cast<std::uint64_t>(s));
    if (traj.back() == Partition({2})) ++rows;
  }
  EXPECT_NEAR(rows / static_cast<double>(trials), 0.5, 0.02);
}

}  // namespace
}  // namespace kerov

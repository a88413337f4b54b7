// Copyright 2026 The tct-solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tct/thresholds.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tct/error.h"

namespace tct {
namespace {

using ::testing::ElementsAre;

Rational ThreePow(int e) {
  Rational p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

TEST(TripleFromDigitsTest, IdentityDigitsGiveExtremePoint) {
  const std::vector<std::array<int, 3>> digits(kTripleDigits, {0, 1, 2});
  const Triple t = TripleFromDigits(digits);
  const Rational tail = 1 / ThreePow(kTripleDigits + 1);
  EXPECT_EQ(t.x, tail);
  EXPECT_EQ(t.y, Frac(1, 3));
  EXPECT_EQ(t.z, Frac(2, 3) - tail);
  EXPECT_EQ(t.x + t.y + t.z, 1);
}

TEST(TripleFromDigitsTest, RejectsNonPermutation) {
  const std::vector<std::array<int, 3>> digits = {{0, 0, 2}};
  EXPECT_THROW(TripleFromDigits(digits), TctError);
}

TEST(SampleTripleTest, SumsToOneInsideIntervals) {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Triple t = SampleTriple(rng);
    EXPECT_EQ(t.x + t.y + t.z, 1);
    EXPECT_GE(t.x, 0);
    EXPECT_LE(t.x, Frac(2, 9));
    EXPECT_GE(t.y, Frac(2, 9));
    EXPECT_LE(t.y, Frac(4, 9));
    EXPECT_GE(t.z, Frac(4, 9));
    EXPECT_LE(t.z, Frac(6, 9));
  }
}

// Means 1/9, 3/9, 5/9 of the uniform intervals; sd of each is (2/9)/sqrt(12).
TEST(SampleTripleTest, MeansMatchUniformIntervals) {
  Rng rng(2);
  const int samples = 100000;
  double sum[3] = {0, 0, 0};
  for (int i = 0; i < samples; ++i) {
    const Triple t = SampleTriple(rng);
    sum[0] += t.x.get_d();
    sum[1] += t.y.get_d();
    sum[2] += t.z.get_d();
  }
  const double tolerance = 3 * (2.0 / 9) / std::sqrt(12.0 * samples);
  EXPECT_NEAR(sum[0] / samples, 1.0 / 9, tolerance);
  EXPECT_NEAR(sum[1] / samples, 3.0 / 9, tolerance);
  EXPECT_NEAR(sum[2] / samples, 5.0 / 9, tolerance);
}

TEST(ThresholdGroupsTest, PairsAndLeadingTriple) {
  EXPECT_THAT(ThresholdGroups(2), ElementsAre(ElementsAre(1, 2)));
  EXPECT_THAT(ThresholdGroups(4), ElementsAre(ElementsAre(1, 2), ElementsAre(3, 4)));
  EXPECT_THAT(ThresholdGroups(5), ElementsAre(ElementsAre(1, 2, 3), ElementsAre(4, 5)));
  EXPECT_THROW(ThresholdGroups(1), TctError);
}

TEST(GroupBudgetTest, FiveLayerBudgets) {
  const auto groups = ThresholdGroups(5);
  EXPECT_EQ(GroupBudget(groups[0], 5), Frac(9, 25));
  EXPECT_EQ(GroupBudget(groups[1], 5), Frac(16, 25));
}

TEST(SampleThresholdsTest, DepthTwoIsComplementaryPair) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const PositionThresholds t = SampleThresholds(2, rng);
    EXPECT_GE(t.a[0], 0);
    EXPECT_LE(t.a[0], Frac(1, 2));
    EXPECT_EQ(t.a[1], 1 - t.a[0]);
  }
}

TEST(SampleThresholdsTest, DepthFourPairSums) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const PositionThresholds t = SampleThresholds(4, rng);
    EXPECT_EQ(t.a[0] + t.a[1], Frac(1, 4));
    EXPECT_EQ(t.a[2] + t.a[3], Frac(3, 4));
  }
}

TEST(SampleThresholdsTest, SumIsOneAndEachInItsInterval) {
  Rng rng(5);
  for (int d = 2; d <= 9; ++d) {
    for (int i = 0; i < 100; ++i) {
      const PositionThresholds t = SampleThresholds(d, rng);
      Rational sum = 0;
      for (int p = 1; p <= d; ++p) {
        EXPECT_GE(t.a[p - 1], IntervalLow(p, d));
        EXPECT_LE(t.a[p - 1], IntervalHigh(p, d));
        sum += t.a[p - 1];
      }
      EXPECT_EQ(sum, 1);
    }
  }
}

TEST(SampleAssignmentTest, SigmaIsPermutationAndThresholdsFollowIt) {
  Rng rng(6);
  for (int d = 2; d <= 7; ++d) {
    const ThresholdAssignment t = SampleAssignment(d, rng);
    std::vector<int> sorted = t.sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < d; ++i) EXPECT_EQ(sorted[i], i + 1);
    Rational sum = 0;
    for (int i = 1; i <= d; ++i) {
      EXPECT_GE(t.a[i - 1], IntervalLow(t.sigma[i - 1], d));
      EXPECT_LE(t.a[i - 1], IntervalHigh(t.sigma[i - 1], d));
      sum += t.a[i - 1];
      const auto group = t.GroupOfLayer(i);
      EXPECT_GE(group.size(), 2u);
      EXPECT_LE(group.size(), 3u);
      EXPECT_NE(std::find(group.begin(), group.end(), i), group.end());
    }
    EXPECT_EQ(sum, 1);
  }
}

TEST(SampleAssignmentTest, SameSeedSameDraw) {
  Rng a(77);
  Rng b(77);
  const ThresholdAssignment x = SampleAssignment(5, a);
  const ThresholdAssignment y = SampleAssignment(5, b);
  EXPECT_EQ(x.sigma, y.sigma);
  EXPECT_EQ(x.a, y.a);
}

}  // namespace
}  // namespace tct

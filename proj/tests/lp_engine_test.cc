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

#include "tct/lp_engine.h"

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/separation.h"
#include "test_util.h"

namespace tct {
namespace {

using ::testing::ElementsAre;
using testing_util::MakeChain;

const Rational kEps = Frac(1, 20);

std::vector<Rational> Constant(int n, const Rational& value) {
  return std::vector<Rational>(n, value);
}

TEST(SeparateFractionalTest, AllOnesAccepted) {
  const GapInstance gap = GenGapInstance(3, 2);
  const auto result =
      SeparateFractional(gap.norm, Layer(gap.norm), Constant(gap.norm.num_jobs(), 1), kEps);
  EXPECT_TRUE(result.accepted);
}

TEST(SeparateFractionalTest, ZeroOnGapCutsTheSlowestChain) {
  const GapInstance gap = GenGapInstance(3, 2);
  const auto result =
      SeparateFractional(gap.norm, Layer(gap.norm), Constant(gap.norm.num_jobs(), 0), kEps);
  ASSERT_FALSE(result.accepted);
  std::vector<std::string> ids;
  for (int v : result.cut) ids.push_back(gap.norm.id(v));
  EXPECT_THAT(ids, ElementsAre(GapJobId(1, 2), GapJobId(2, 2), GapJobId(3, 2)));
}

TEST(SeparateFractionalTest, GapCoverAccepted) {
  for (int k : {2, 4, 6}) {
    const GapInstance gap = GenGapInstance(3, k);
    EXPECT_TRUE(SeparateFractional(gap.norm, Layer(gap.norm), gap.cover.x, kEps).accepted);
  }
}

// Soundness at the quantization level: acceptance implies every blocker
// chain is covered at least 1/(1+eps).
TEST(SeparateFractionalTest, SoundAgainstEnumeratedBlocker) {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const NormalizedInstance norm = testing_util::RandomNormalized(rng, 3 + trial % 9);
    const LayeredView layered = Layer(norm);
    std::vector<Rational> x(norm.num_jobs());
    for (Rational& value : x) value = Frac(static_cast<long>(rng.UniformInt(0, 8)), 8);
    const auto result = SeparateFractional(norm, layered, x, kEps);
    const auto blocker = testing_util::BruteForceBlocker(norm);
    if (result.accepted) {
      for (const auto& chain : blocker) {
        Rational sum = 0;
        for (int v : chain) sum += x[v];
        EXPECT_GE(sum * (1 + kEps), 1);
      }
    } else {
      EXPECT_TRUE(IsChain(norm, result.cut));
      EXPECT_GT(ChainDelay(norm, result.cut), Extended(norm.deadline()));
      Rational sum = 0;
      for (int v : result.cut) sum += x[v];
      EXPECT_LT(sum, 1);
    }
  }
}

TEST(SolveLpTest, NoBindingChainGivesZero) {
  const NormalizedInstance norm = MakeChain({1, 1}, {5, 5}, 10);
  for (LpMode mode : {LpMode::kApprox, LpMode::kExactSmallDepth}) {
    LpOptions options;
    options.mode = mode;
    const LpResult lp = SolveLp(norm, Layer(norm), options);
    EXPECT_EQ(lp.cover.objective, 0);
    EXPECT_THAT(lp.cover.x, ElementsAre(0, 0));
  }
}

TEST(SolveLpTest, SingleCutPutsWeightOnCheapest) {
  const NormalizedInstance norm = MakeChain({1, 1, 1}, {1, 2, 3}, 2);
  LpOptions options;
  options.mode = LpMode::kExactSmallDepth;
  const LpResult lp = SolveLp(norm, Layer(norm), options);
  EXPECT_EQ(lp.cover.objective, 1);
  EXPECT_THAT(lp.cover.x, ElementsAre(1, 0, 0));
  EXPECT_EQ(lp.cover.quality, CoverQuality::kExact);
}

// Regression value for the smallest gap instance; the j/T cover costs 3.
TEST(SolveLpTest, GapInstanceExactValue) {
  const GapInstance gap = GenGapInstance(3, 2);
  LpOptions options;
  options.mode = LpMode::kExactSmallDepth;
  const LpResult lp = SolveLp(gap.norm, Layer(gap.norm), options);
  EXPECT_EQ(lp.cover.objective, Frac(9, 4));
  EXPECT_LE(lp.cover.objective, gap.cover.objective);
  EXPECT_EQ(ExactLpOpt(gap.norm).objective, Frac(9, 4));
}

TEST(SolveLpTest, ExactMatchesBasicSolutionEnumeration) {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const NormalizedInstance norm = testing_util::RandomNormalized(rng, 3 + trial % 4);
    const auto blocker = testing_util::BruteForceBlocker(norm);
    std::vector<Rational> cost;
    bool finite = true;
    for (int v = 0; v < norm.num_jobs(); ++v) {
      finite = finite && norm.fast_cost(v).is_finite();
      if (finite) cost.push_back(norm.fast_cost(v).value());
    }
    if (!finite || blocker.size() > 12) continue;
    const auto reference = testing_util::BruteForceLp(cost, blocker);
    ASSERT_TRUE(reference.has_value());
    LpOptions options;
    options.mode = LpMode::kExactSmallDepth;
    EXPECT_EQ(SolveLp(norm, Layer(norm), options).cover.objective, *reference);
    EXPECT_EQ(SolveCoverLp(norm, blocker, /*floating_kernel=*/false).objective, *reference);
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(SolveLpTest, ApproxWithinFactorAndFeasible) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomLayeredParams params;
    params.depth = 2 + static_cast<int>(seed % 3);
    params.num_jobs = 8 + static_cast<int>(seed % 10);
    params.seed = seed;
    const NormalizedInstance norm = GenRandomLayered(params);
    const LayeredView layered = Layer(norm);
    const LpResult approx = SolveLp(norm, layered);
    LpOptions exact_options;
    exact_options.mode = LpMode::kExactSmallDepth;
    const LpResult exact = SolveLp(norm, layered, exact_options);
    EXPECT_EQ(approx.cover.quality, CoverQuality::kApprox);
    EXPECT_LE(approx.cover.objective, (1 + kEps) * exact.cover.objective);
    EXPECT_GE(approx.cover.objective, exact.cover.objective);
    const auto blocker = EnumerateBlocker(norm);
    EXPECT_GE(MinCoverage(approx.cover.x, blocker).min_coverage, 1);
    EXPECT_GE(MinCoverage(exact.cover.x, blocker).min_coverage, 1);
    for (const LpResult* lp : {&approx, &exact}) {
      for (std::size_t i = 1; i < lp->objective_history.size(); ++i) {
        EXPECT_GE(lp->objective_history[i], lp->objective_history[i - 1]);
      }
      for (const auto& cut : lp->pool.cuts) {
        EXPECT_TRUE(IsChain(norm, cut));
        EXPECT_GT(ChainDelay(norm, cut), Extended(norm.deadline()));
      }
    }
  }
}

TEST(SolveLpTest, FloatingWarmStartAgreesWithExactKernel) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    RandomLayeredParams params;
    params.depth = 4;
    params.num_jobs = 18;
    params.seed = seed;
    const NormalizedInstance norm = GenRandomLayered(params);
    const auto blocker = EnumerateBlocker(norm);
    EXPECT_EQ(SolveCoverLp(norm, blocker, true).objective,
              SolveCoverLp(norm, blocker, false).objective);
  }
}

TEST(SolveLpTest, InfiniteCostJobsStayAtZero) {
  const NormalizedInstance norm = testing_util::MakeNormalized(
      {Extended(2), Extended(2)}, {Extended::Infinite(), Extended(3)}, {{0, 1}}, 3);
  LpOptions options;
  options.mode = LpMode::kExactSmallDepth;
  const LpResult lp = SolveLp(norm, Layer(norm), options);
  EXPECT_THAT(lp.cover.x, ElementsAre(0, 1));
  EXPECT_EQ(lp.cover.objective, 3);
}

TEST(SolveLpTest, CutWithOnlyInfiniteCostsIsInfeasible) {
  const NormalizedInstance norm = testing_util::MakeNormalized(
      {Extended(2), Extended(2)}, {Extended::Infinite(), Extended::Infinite()}, {{0, 1}}, 3);
  try {
    SolveLp(norm, Layer(norm));
    FAIL() << "expected an error";
  } catch (const TctError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(MinCoverageTest, ReportsWorstCut) {
  const std::vector<Rational> x = {Frac(1, 2), Frac(1, 4), 1};
  const CoverageReport report = MinCoverage(x, {{0, 2}, {0, 1}, {1}});
  EXPECT_EQ(report.min_coverage, Frac(1, 4));
  EXPECT_EQ(report.worst_cut, 2);
}

}  // namespace
}  // namespace tct

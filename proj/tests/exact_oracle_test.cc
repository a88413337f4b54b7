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

#include "tct/exact_oracle.h"

#include <algorithm>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tct/error.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/lp_engine.h"
#include "test_util.h"

namespace tct {
namespace {

using ::testing::Contains;
using ::testing::IsEmpty;
using ::testing::Not;
using testing_util::MakeChain;

// True iff some orientation of the six-vertex graph is a strict partial
// order, i.e. the graph is the comparability graph of a precedence order.
template <typename Bit>
bool IsComparabilityGraph(std::uint64_t adj, Bit bit) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (adj & bit(u, v)) edges.emplace_back(u, v);
    }
  }
  for (std::uint32_t dir = 0; dir < (1u << edges.size()); ++dir) {
    bool less[6][6] = {};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      if (dir >> e & 1) {
        less[v][u] = true;
      } else {
        less[u][v] = true;
      }
    }
    bool transitive = true;
    for (int u = 0; u < 6 && transitive; ++u) {
      for (int v = 0; v < 6 && transitive; ++v) {
        if (!less[u][v]) continue;
        for (int w = 0; w < 6; ++w) {
          if (less[v][w] && !less[u][w]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) return true;
  }
  return false;
}

// The hypergraph {1,4,6}, {2,3,6}, {2,4,5} on six jobs is 3-partite but is
// not the blocker of any instance. Spot-check over every graph whose
// cliques could be the chains (max clique 3, all three sets cliques),
// integer delays 0..5 and every integer deadline.
TEST(BlockerShapeTest, ThreePartiteCounterexampleIsNotABlocker) {
  const std::vector<std::uint32_t> target = {0b101001, 0b100110, 0b011010};  // bit v-1
  std::vector<std::pair<int, int>> optional;
  // Adjacency bits: pair (u,v), u < v, at u*6+v.
  auto bit = [](int u, int v) { return std::uint64_t{1} << (u < v ? u * 6 + v : v * 6 + u); };
  std::uint64_t forced_adj = 0;
  for (std::uint32_t set : target) {
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if ((set >> u & 1) && (set >> v & 1)) forced_adj |= bit(u, v);
      }
    }
  }
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (!(forced_adj & bit(u, v))) optional.emplace_back(u, v);
    }
  }
  int graphs = 0;
  for (std::uint32_t pick = 0; pick < (1u << optional.size()); ++pick) {
    std::uint64_t adj = forced_adj;
    for (std::size_t e = 0; e < optional.size(); ++e) {
      if (pick >> e & 1) adj |= bit(optional[e].first, optional[e].second);
    }
    std::vector<std::uint32_t> cliques;
    bool too_deep = false;
    for (std::uint32_t set = 1; set < 64; ++set) {
      bool clique = true;
      for (int u = 0; u < 6 && clique; ++u) {
        for (int v = u + 1; v < 6; ++v) {
          if ((set >> u & 1) && (set >> v & 1) && !(adj & bit(u, v))) clique = false;
        }
      }
      if (!clique) continue;
      if (__builtin_popcount(set) > 3) too_deep = true;
      cliques.push_back(set);
    }
    if (too_deep || !IsComparabilityGraph(adj, bit)) continue;
    ++graphs;
    std::vector<int> t(6, 0);
    for (int code = 0; code < 46656; ++code) {
      for (int v = 0, c = code; v < 6; ++v, c /= 6) t[v] = c % 6;
      for (int deadline = 0; deadline < 15; ++deadline) {
        auto delay = [&](std::uint32_t set) {
          int sum = 0;
          for (int v = 0; v < 6; ++v) {
            if (set >> v & 1) sum += t[v];
          }
          return sum;
        };
        std::vector<std::uint32_t> blocker;
        for (std::uint32_t set : cliques) {
          if (delay(set) <= deadline) continue;
          bool minimal = true;
          for (int v = 0; v < 6 && minimal; ++v) {
            if ((set >> v & 1) && delay(set & ~(1u << v)) > deadline) minimal = false;
          }
          if (minimal) blocker.push_back(set);
        }
        std::sort(blocker.begin(), blocker.end());
        auto sorted = target;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_NE(blocker, sorted) << "graph " << pick << " delays " << code << " T " << deadline;
      }
    }
  }
  EXPECT_GT(graphs, 0);
}

TEST(ExactTctOptTest, GapInstanceCostsThree) {
  const GapInstance gap = GenGapInstance(3, 2);
  const AccelerationSet sol = ExactTctOpt(gap.norm);
  EXPECT_EQ(sol.cost, Extended(3));
  EXPECT_TRUE(CheckFeasible(gap.norm, sol).feasible);
}

TEST(ExactTctOptTest, NoBindingChainIsEmpty) {
  const AccelerationSet sol = ExactTctOpt(MakeChain({1, 1}, {1, 1}, 5));
  EXPECT_THAT(sol.fast, IsEmpty());
  EXPECT_EQ(sol.cost, Extended(0));
}

TEST(ExactTctOptTest, SingleChainTakesCheapest) {
  const NormalizedInstance norm = MakeChain({1, 1, 1}, {1, 2, 3}, 2);
  const AccelerationSet sol = ExactTctOpt(norm);
  EXPECT_EQ(sol.cost, Extended(1));
  EXPECT_EQ(sol.fast, std::vector<int>{0});
}

TEST(ExactTctOptTest, MatchesSubsetEnumeration) {
  Rng rng(99);
  for (int trial = 0; trial < 250; ++trial) {
    const NormalizedInstance norm = testing_util::RandomNormalized(rng, 2 + trial % 13);
    const auto brute = testing_util::BruteForceOpt(norm);
    if (brute.cost.is_infinite()) {
      EXPECT_THROW(ExactTctOpt(norm), TctError);
      continue;
    }
    const AccelerationSet sol = ExactTctOpt(norm);
    EXPECT_EQ(sol.cost, brute.cost);
    EXPECT_TRUE(CheckFeasible(norm, sol).feasible);
  }
}

TEST(EnumerateBlockerTest, GapMembers) {
  const GapInstance gap = GenGapInstance(3, 2);
  const auto blocker = EnumerateBlocker(gap.norm);
  auto idx = [&](int i, int j) { return gap.norm.base().IndexOf(GapJobId(i, j)); };
  // The delay-6 chain of the slowest jobs is not minimal; its two-job
  // sub-chains (delay 4 > 3) are.
  EXPECT_THAT(blocker, Contains(std::vector<int>{idx(1, 2), idx(2, 2)}));
  EXPECT_THAT(blocker, Contains(std::vector<int>{idx(1, 2), idx(3, 2)}));
  EXPECT_THAT(blocker, Contains(std::vector<int>{idx(2, 2), idx(3, 2)}));
  EXPECT_THAT(blocker, Not(Contains(std::vector<int>{idx(1, 2), idx(2, 2), idx(3, 2)})));
  auto sorted = blocker;
  for (auto& chain : sorted) std::sort(chain.begin(), chain.end());
  auto brute = testing_util::BruteForceBlocker(gap.norm);
  std::sort(sorted.begin(), sorted.end());
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(sorted, brute);
}

TEST(EnumerateBlockerTest, EmptyWhenNothingBinds) {
  EXPECT_THAT(EnumerateBlocker(MakeChain({1, 2}, {1, 1}, 3)), IsEmpty());
}

TEST(EnumerateBlockerTest, MatchesSubsetEnumeration) {
  Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const NormalizedInstance norm = testing_util::RandomNormalized(rng, 2 + trial % 11);
    auto blocker = EnumerateBlocker(norm);
    for (auto& chain : blocker) std::sort(chain.begin(), chain.end());
    std::sort(blocker.begin(), blocker.end());
    auto brute = testing_util::BruteForceBlocker(norm);
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(blocker, brute);
  }
}

TEST(EnumerateBlockerTest, RespectsLimits) {
  RandomLayeredParams params;
  params.depth = 8;
  params.num_jobs = 40;
  const NormalizedInstance norm = GenRandomLayered(params);
  try {
    EnumerateBlocker(norm);
    FAIL() << "expected the resource cap";
  } catch (const TctError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceCap);
  }
}

TEST(MinCostHittingSetTest, MatchesSubsetEnumeration) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 10;
    std::vector<Extended> costs;
    for (int v = 0; v < n; ++v) {
      costs.push_back(rng.UniformInt(0, 9) == 0 ? Extended::Infinite()
                                                : Extended(rng.UniformInt(0, 6)));
    }
    std::vector<std::vector<int>> sets(rng.UniformInt(0, 8));
    for (auto& set : sets) {
      for (int v = 0; v < n; ++v) {
        if (rng.UniformInt(0, 2) == 0) set.push_back(v);
      }
      if (set.empty()) set.push_back(static_cast<int>(rng.UniformInt(0, n - 1)));
    }
    Extended best = Extended::Infinite();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool hits = true;
      for (const auto& set : sets) {
        bool any = false;
        for (int v : set) any = any || (mask >> v & 1);
        hits = hits && any;
      }
      if (!hits) continue;
      Extended cost(0);
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) cost += costs[v];
      }
      best = std::min(best, cost);
    }
    if (best.is_infinite()) {
      EXPECT_THROW(MinCostHittingSet(costs, sets), TctError);
      continue;
    }
    const HittingSetResult result = MinCostHittingSet(costs, sets);
    EXPECT_EQ(Extended(result.cost), best);
    for (const auto& set : sets) {
      EXPECT_TRUE(std::any_of(set.begin(), set.end(), [&](int v) {
        return std::binary_search(result.elements.begin(), result.elements.end(), v);
      }));
    }
  }
}

TEST(ExactDvdOptTest, SpecExamples) {
  EXPECT_EQ(ExactDvdOpt(GenPath(9, 3)).size(), 3u);
  EXPECT_EQ(ExactDvdOpt(GenTournament(5, 2)).size(), 4u);
  const DvdInstance edgeless({"a", "b", "c"}, {}, 2);
  EXPECT_THAT(ExactDvdOpt(edgeless), IsEmpty());
}

TEST(ExactDvdOptTest, TournamentFormula) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      EXPECT_EQ(static_cast<int>(ExactDvdOpt(GenTournament(n, k)).size()), n - k + 1);
    }
  }
}

TEST(ExactDvdOptTest, MatchesSubsetEnumeration) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const int k = 2 + trial % 3;
    const DvdInstance dvd = testing_util::RandomDvd(n, k, rng);
    const std::vector<int> set = ExactDvdOpt(dvd);
    EXPECT_EQ(static_cast<int>(set.size()), testing_util::BruteForceDvd(dvd));
    EXPECT_TRUE(DestroysAllKPaths(dvd, set));
  }
}

TEST(ExactLpOptTest, SpecExamples) {
  EXPECT_EQ(ExactLpOpt(MakeChain({1, 1}, {1, 1}, 5)).objective, 0);
  EXPECT_EQ(ExactLpOpt(MakeChain({1, 1, 1}, {1, 2, 3}, 2)).objective, 1);
  const GapInstance gap = GenGapInstance(3, 2);
  EXPECT_LE(ExactLpOpt(gap.norm).objective, 3);
}

// LP <= OPT <= (d/2) LP on small instances.
TEST(ExactLpOptTest, SandwichesIntegralOptimum) {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalizedInstance norm = testing_util::RandomNormalized(rng, 3 + trial % 10);
    const auto brute = testing_util::BruteForceOpt(norm);
    if (brute.cost.is_infinite()) continue;
    const FractionalCover lp = ExactLpOpt(norm);
    const int d = std::max(2, Layer(norm).depth());
    EXPECT_LE(Extended(lp.objective), brute.cost);
    EXPECT_LE(brute.cost, Extended(Frac(d, 2) * lp.objective));
  }
}

TEST(ExactGeneralOptTest, PicksCheapestFeasibleCombination) {
  const TctInstance instance(
      {{"a", {{Extended(4), Extended(0)}, {Extended(2), Extended(1)}, {Extended(0), Extended(5)}}},
       {"b", {{Extended(3), Extended(0)}, {Extended(1), Extended(2)}}}},
      {{"a", "b"}}, 4);
  const GeneralOptimum opt = ExactGeneralOpt(instance);
  ASSERT_TRUE(opt.feasible);
  EXPECT_EQ(opt.cost, Extended(3));
}

}  // namespace
}  // namespace tct

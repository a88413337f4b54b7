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

#include "tct/separation.h"

#include <algorithm>
#include <optional>

#include "tct/error.h"
#include "tct/feasibility.h"

namespace tct {

SeparationResult SeparateIntegral(const NormalizedInstance& norm,
                                  std::span<const int> fast) {
  FeasibilityReport report = CheckFeasible(norm, fast);
  SeparationResult result;
  result.accepted = report.feasible;
  result.cut = std::move(report.violated_chain);
  return result;
}

Extended ChainDelay(const NormalizedInstance& norm, std::span<const int> chain) {
  Extended total(0);
  for (int v : chain) total += norm.slow_delay(v);
  return total;
}

bool IsChain(const NormalizedInstance& norm, std::span<const int> members) {
  const Dag& dag = norm.dag();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int a = members[i];
      const int b = members[j];
      if (a == b || !(dag.Reaches(a, b) || dag.Reaches(b, a))) return false;
    }
  }
  return true;
}

std::vector<int> ShrinkCut(const NormalizedInstance& norm,
                           std::vector<int> chain) {
  const Extended deadline(norm.deadline());
  std::erase_if(chain, [&](int v) { return norm.slow_delay(v) == Extended(0); });
  auto exceeds = [&](std::span<const int> part) {
    return ChainDelay(norm, part) > deadline;
  };
  std::size_t front = 0;
  std::size_t back = chain.size();
  while (back - front > 1 &&
         exceeds(std::span<const int>(chain).subspan(front + 1, back - front - 1))) {
    ++front;
  }
  while (back - front > 1 &&
         exceeds(std::span<const int>(chain).subspan(front, back - front - 1))) {
    --back;
  }
  return std::vector<int>(chain.begin() + front, chain.begin() + back);
}

SeparationResult SeparateFractional(const NormalizedInstance& norm,
                                    const LayeredView& layered,
                                    std::span<const Rational> x,
                                    const Rational& epsilon) {
  if (epsilon <= 0) ThrowInvalid("epsilon must be positive");
  const int n = norm.num_jobs();
  if (static_cast<int>(x.size()) != n) ThrowInvalid("x has wrong length");
  const int d = std::max(1, layered.depth());
  const Rational scale = Rational(2 * d) / epsilon;  // 2d/eps
  const Rational cap_q = Ceil(scale) - 1;            // largest q-sum < 2d/eps
  if (cap_q > 1'000'000) ThrowInvalid("epsilon too small for the DP");
  const int cap = static_cast<int>(cap_q.get_num().get_si());

  std::vector<int> q(n, -1);  // -1: cannot appear on an uncovered chain
  for (int v = 0; v < n; ++v) {
    if (x[v] < 0 || x[v] > 1) ThrowInvalid("x outside [0,1]");
    if (norm.slow_delay(v) == Extended(0)) continue;
    const Rational qv = Ceil(scale * x[v]);
    if (qv <= cap) q[v] = static_cast<int>(qv.get_num().get_si());
  }

  const Dag& dag = norm.dag();
  std::vector<std::vector<int>> next(n);
  for (int v = 0; v < n; ++v) {
    if (q[v] < 0) continue;
    for (int w : dag.ClosureSuccessors(v)) {
      if (q[w] >= 0) next[v].push_back(w);
    }
  }

  // best[v][s]: maximum slow delay of a chain starting at v whose q-sum is s.
  std::vector<std::vector<std::optional<Extended>>> best(
      n, std::vector<std::optional<Extended>>(cap + 1));
  const auto& topo = dag.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    if (q[v] < 0) continue;
    for (int s = q[v]; s <= cap; ++s) {
      std::optional<Extended> tail;
      if (s == q[v]) tail = Extended(0);
      for (int w : next[v]) {
        const auto& g = best[w][s - q[v]];
        if (g && (!tail || *g > *tail)) tail = g;
      }
      if (tail) best[v][s] = norm.slow_delay(v) + *tail;
    }
  }

  const Extended deadline(norm.deadline());
  for (int s = 0; s <= cap; ++s) {
    // Most delayed violated chain at this q-sum; first start on ties.
    int start = -1;
    for (int u = 0; u < n; ++u) {
      if (!best[u][s] || !(*best[u][s] > deadline)) continue;
      if (start < 0 || *best[u][s] > *best[start][s]) start = u;
    }
    if (start < 0) continue;
    {
      std::vector<int> chain;
      int v = start;
      int budget = s;
      while (true) {
        chain.push_back(v);
        const Extended& here = *best[v][budget];
        const Extended& t = norm.slow_delay(v);
        // Remaining delay to collect after v; nullopt means "any".
        std::optional<Extended> target;
        if (t.is_finite()) {
          target = here.is_infinite() ? Extended::Infinite()
                                      : Extended(here.value() - t.value());
        }
        if (budget == q[v] && (!target || *target == Extended(0))) break;
        const int rest = budget - q[v];
        int pick = -1;
        for (int w : next[v]) {
          const auto& g = best[w][rest];
          if (g && (!target || *g == *target)) {
            pick = w;
            break;
          }
        }
        if (pick < 0) {
          throw TctError(ErrorKind::kInternal, "separation DP reconstruction failed");
        }
        v = pick;
        budget = rest;
      }
      SeparationResult result;
      result.accepted = false;
      std::erase_if(chain, [&](int u) { return norm.slow_delay(u) == Extended(0); });
      result.cut = std::move(chain);
      Rational covered = 0;
      for (int u : result.cut) covered += x[u];
      if (covered >= 1 || !(ChainDelay(norm, result.cut) > deadline)) {
        throw TctError(ErrorKind::kInternal, "separation returned a non-violated cut");
      }
      return result;
    }
  }
  return SeparationResult{};
}

}  // namespace tct

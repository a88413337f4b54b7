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

#include "tct/feasibility.h"

#include <algorithm>
#include <string>

#include "tct/error.h"

namespace tct {
namespace {

// longest[v] = max total delay of a path starting at v.
std::vector<Extended> LongestFrom(const Dag& dag,
                                  const std::vector<Extended>& delay) {
  std::vector<Extended> longest(dag.num_nodes());
  const auto& topo = dag.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    Extended best(0);
    for (int w : dag.successors(v)) best = std::max(best, longest[w]);
    longest[v] = delay[v] + best;
  }
  return longest;
}

}  // namespace

int ComputeDepth(const TctInstance& instance) { return instance.dag().depth(); }

LayeredView Layer(const TctInstance& instance) {
  return LayeredView(instance.dag().longest_path_ending_at(),
                     instance.dag().depth());
}

FeasibilityReport CheckFeasible(const NormalizedInstance& norm,
                                std::span<const int> fast) {
  const int n = norm.num_jobs();
  std::vector<char> is_fast(n, 0);
  for (int v : fast) {
    if (v < 0 || v >= n) ThrowInvalid("job index out of range");
    is_fast[v] = 1;
  }
  std::vector<Extended> delay(n);
  for (int v = 0; v < n; ++v) {
    delay[v] = is_fast[v] ? Extended(0) : norm.slow_delay(v);
  }
  const Dag& dag = norm.dag();
  const std::vector<Extended> longest = LongestFrom(dag, delay);

  FeasibilityReport report;
  report.max_delay = Extended(0);
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (start < 0 || longest[v] > report.max_delay) {
      report.max_delay = longest[v];
      start = v;
    }
  }
  report.feasible = report.max_delay <= Extended(norm.deadline());
  if (report.feasible) return report;

  // Walk the smallest-index maximizing successor; stop as soon as the
  // remaining delay is zero so that the shorter prefix wins ties.
  int v = start;
  Extended remaining = report.max_delay;
  while (true) {
    if (!is_fast[v] && delay[v] > Extended(0)) {
      report.violated_chain.push_back(v);
    }
    if (delay[v].is_infinite()) break;
    if (remaining.is_finite()) {
      remaining = Extended(remaining.value() - delay[v].value());
    }
    if (remaining == Extended(0)) break;
    int next = -1;
    for (int w : dag.successors(v)) {
      if (longest[w] == remaining && (next < 0 || w < next)) next = w;
    }
    if (next < 0) break;
    v = next;
  }
  return report;
}

Extended SolutionCost(const NormalizedInstance& norm,
                      std::span<const int> fast) {
  std::vector<char> seen(norm.num_jobs(), 0);
  Extended total(0);
  for (int v : fast) {
    if (v < 0 || v >= norm.num_jobs()) ThrowInvalid("job index out of range");
    if (seen[v]) ThrowInvalid("job '" + norm.id(v) + "' listed twice");
    seen[v] = 1;
    total += norm.fast_cost(v);
  }
  return total;
}

AccelerationSet MakeAccelerationSet(const NormalizedInstance& norm,
                                    std::vector<int> fast) {
  std::sort(fast.begin(), fast.end());
  fast.erase(std::unique(fast.begin(), fast.end()), fast.end());
  AccelerationSet sol;
  sol.cost = SolutionCost(norm, fast);
  sol.fast = std::move(fast);
  return sol;
}

AccelerationSet MakeAccelerationSetByIds(const NormalizedInstance& norm,
                                         const std::vector<std::string>& ids) {
  std::vector<int> fast;
  fast.reserve(ids.size());
  for (const std::string& id : ids) fast.push_back(norm.base().IndexOf(id));
  return MakeAccelerationSet(norm, std::move(fast));
}

ChoiceReport EvaluateChoice(const TctInstance& instance,
                            std::span<const int> alternative) {
  const int n = instance.num_jobs();
  if (static_cast<int>(alternative.size()) != n) {
    ThrowInvalid("choice vector has wrong length");
  }
  std::vector<Extended> delay(n);
  ChoiceReport report;
  report.cost = Extended(0);
  for (int v = 0; v < n; ++v) {
    const auto& alts = instance.job(v).alternatives;
    const int a = alternative[v];
    if (a < 0 || a >= static_cast<int>(alts.size())) {
      ThrowInvalid("alternative index out of range for '" + instance.id(v) + "'");
    }
    delay[v] = alts[a].delay;
    report.cost += alts[a].cost;
  }
  const std::vector<Extended> longest = LongestFrom(instance.dag(), delay);
  report.max_delay = Extended(0);
  for (const Extended& d : longest) report.max_delay = std::max(report.max_delay, d);
  report.feasible = report.max_delay <= Extended(instance.deadline());
  return report;
}

}  // namespace tct

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

#ifndef TCT_FEASIBILITY_H_
#define TCT_FEASIBILITY_H_

#include <span>
#include <string_view>
#include <vector>

#include "tct/model.h"

namespace tct {

// Number of jobs on a longest chain; 0 only for an empty instance.
int ComputeDepth(const TctInstance& instance);

LayeredView Layer(const TctInstance& instance);
inline LayeredView Layer(const NormalizedInstance& norm) {
  return Layer(norm.base());
}

struct FeasibilityReport {
  bool feasible = true;
  // Largest total delay over all chains, accelerated jobs counting 0.
  Extended max_delay;
  // Empty if feasible. Otherwise the non-accelerated jobs of positive delay
  // on a maximizing chain (ascending along the chain); their slow delays
  // sum to max_delay > T.
  std::vector<int> violated_chain;
};

// Linear-time longest-chain DP. Ties resolve to the lexicographically
// smallest maximizing chain. `fast` may be in any order.
FeasibilityReport CheckFeasible(const NormalizedInstance& norm,
                                std::span<const int> fast);
inline FeasibilityReport CheckFeasible(const NormalizedInstance& norm,
                                       const AccelerationSet& sol) {
  return CheckFeasible(norm, sol.fast);
}

// Sum of fast costs. Throws on out-of-range or repeated indices.
Extended SolutionCost(const NormalizedInstance& norm, std::span<const int> fast);

// Sorted, deduplicated set with its cost.
AccelerationSet MakeAccelerationSet(const NormalizedInstance& norm,
                                    std::vector<int> fast);
AccelerationSet MakeAccelerationSetByIds(
    const NormalizedInstance& norm, const std::vector<std::string>& ids);

// Per-job alternative indices for a general instance.
struct ChoiceReport {
  bool feasible = true;
  Extended max_delay;
  Extended cost;
};
ChoiceReport EvaluateChoice(const TctInstance& instance,
                            std::span<const int> alternative);

}  // namespace tct

#endif  // TCT_FEASIBILITY_H_

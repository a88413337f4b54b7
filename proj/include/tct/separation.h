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

#ifndef TCT_SEPARATION_H_
#define TCT_SEPARATION_H_

#include <span>
#include <vector>

#include "tct/model.h"

namespace tct {

struct SeparationResult {
  bool accepted = true;
  // A chain (in precedence order) with total slow delay > T that x covers
  // by less than 1. Empty when accepted.
  std::vector<int> cut;
};

// Integral oracle: same DP as CheckFeasible.
SeparationResult SeparateIntegral(const NormalizedInstance& norm,
                                  std::span<const int> fast);

// Approximate fractional oracle. Rounds every x_v up to a multiple of
// eps/(2d), q_v = ceil(2d x_v / eps), and runs a DP over (job, sum of q
// along a chain) maximizing the slow delay of chains whose q-sum stays below
// 2d/eps. Accepts iff all those chains fit into the deadline; then every
// violated chain P has sum_{P} x_v >= 1 - eps/2. Otherwise returns a
// violated chain with sum_{P} x_v < 1, minus its zero-delay members.
//
// Among violating (q-sum, start job) pairs the smallest q-sum wins, then the
// smallest start; the chain follows the lexicographically smallest
// maximum-delay continuation.
SeparationResult SeparateFractional(const NormalizedInstance& norm,
                                    const LayeredView& layered,
                                    std::span<const Rational> x,
                                    const Rational& epsilon);

// Drops zero-delay members, then removes members from the front and then
// from the back of the chain while its slow delay still exceeds T.
std::vector<int> ShrinkCut(const NormalizedInstance& norm,
                           std::vector<int> chain);

// Sum of slow delays over a set of jobs.
Extended ChainDelay(const NormalizedInstance& norm, std::span<const int> chain);

// True iff the members are pairwise comparable in the precedence order.
bool IsChain(const NormalizedInstance& norm, std::span<const int> members);

}  // namespace tct

#endif  // TCT_SEPARATION_H_

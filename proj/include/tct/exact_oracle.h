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

// Brute-force ground truth at desk scale.

#ifndef TCT_EXACT_ORACLE_H_
#define TCT_EXACT_ORACLE_H_

#include <cstdint>
#include <vector>

#include "tct/dvd.h"
#include "tct/model.h"

namespace tct {

struct BlockerLimits {
  // Enumeration is allowed when n <= max_jobs or depth <= max_depth.
  int max_jobs = 25;
  int max_depth = 4;
  // Bound on chains visited during the search.
  std::int64_t max_chains = 5'000'000;
};

// The minimal chains P with sum_{v in P} t_v > T, each listed in precedence
// order, sorted lexicographically. A chain is minimal iff dropping its
// smallest-delay member brings it to <= T (chains containing an INFINITE
// delay job are minimal only as singletons).
std::vector<std::vector<int>> EnumerateBlocker(const NormalizedInstance& norm,
                                               const BlockerLimits& limits = {});

struct HittingSetResult {
  std::vector<int> elements;  // ascending
  Rational cost;
  std::int64_t nodes = 0;     // search nodes expanded
};

// Minimum-cost set meeting every member of `sets`. INFINITE-cost elements
// are never chosen; throws TctError(kInfeasible) if some set has no finite
// element. Branch and bound: branch on the uncovered set with fewest open
// elements, trying elements by increasing cost per uncovered set covered;
// bound by a greedy packing of disjoint uncovered sets. Among optimal
// solutions the first one met in this fixed search order is returned.
HittingSetResult MinCostHittingSet(const std::vector<Extended>& costs,
                                   const std::vector<std::vector<int>>& sets,
                                   std::int64_t max_nodes = 50'000'000);

// Minimum-cost feasible acceleration set (n <= limits.max_jobs).
AccelerationSet ExactTctOpt(const NormalizedInstance& norm,
                            const BlockerLimits& limits = {});

// Minimum number of vertices hitting every k-vertex path (|V| <= max_vertices).
std::vector<int> ExactDvdOpt(const DvdInstance& dvd, int max_vertices = 25);

// LP optimum over the fully enumerated blocker, exact rational simplex.
FractionalCover ExactLpOpt(const NormalizedInstance& norm,
                           const BlockerLimits& limits = {});

struct GeneralOptimum {
  std::vector<int> choice;  // alternative index per job
  Extended cost;
  bool feasible = false;
};

// Exhaustive search over all alternative combinations of a general instance.
GeneralOptimum ExactGeneralOpt(const TctInstance& instance,
                               std::int64_t max_combinations = 2'000'000);

}  // namespace tct

#endif  // TCT_EXACT_ORACLE_H_

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

#ifndef TCT_NORMALIZE_H_
#define TCT_NORMALIZE_H_

#include <string>
#include <utility>
#include <vector>

#include "tct/model.h"

namespace tct {

// A nondominated time/cost pair of an original job, with its position in
// the job's alternative list. Pairs are ordered by strictly increasing delay
// and strictly decreasing cost.
struct ParetoPair {
  Extended delay;
  Extended cost;
  int alternative_index = 0;
};

std::vector<ParetoPair> NondominatedPairs(const Job& job);

// Replaces every job v with r nondominated pairs (t_1,c_1),...,(t_r,c_r) by
// r + 1 mutually incomparable copies v#0..v#r sharing v's predecessors and
// successors. Copy i has alternatives {(0, c_i - c_{i+1}), (t_{i+1}, 0)} with
// c_0 = INFINITE, c_{r+1} = 0 and t_{r+1} = INFINITE. The result has the same
// depth and optimum as the input and carries an origin map.
NormalizedInstance Normalize(const TctInstance& instance);

// Id of copy i of an original job.
std::string CopyId(const std::string& original_id, int copy_index);

// Maps an acceleration set of Normalize(I) back to one alternative per job of
// I, as (original job id, alternative index) sorted by id.
//
// Per original job the pair index is j = 1 + max{i : copy i not accelerated};
// the copies above that index form the accelerated suffix, whose cost is
// exactly c_j, and the slowest unaccelerated copy has delay t_j. So the
// choice has the same chain delays as `sol` and cost at most sol.cost. If the
// last copy (delay INFINITE) is not accelerated, `sol` was infeasible and the
// slowest pair is chosen.
//
// Throws if `norm` has no origin map or `sol` accelerates some copy 0.
std::vector<std::pair<std::string, int>> DenormalizeSolution(
    const NormalizedInstance& norm, const AccelerationSet& sol);

// The same choice as a vector aligned with `original`'s job indices.
std::vector<int> ChoiceVector(
    const TctInstance& original,
    const std::vector<std::pair<std::string, int>>& choice);

}  // namespace tct

#endif  // TCT_NORMALIZE_H_

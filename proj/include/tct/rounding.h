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

// Threshold rounding of fractional covers on the canonical layering.
//
// Every chain meets each layer at most once, so per-layer thresholds with
// sum at most 1 turn a feasible fractional cover x (sum over every violated
// chain >= 1) into a feasible acceleration set: some job on the chain clears
// its threshold. The algorithms differ in how the thresholds are chosen.
//
// Feasibility of the output is guaranteed only when x is LP-feasible; the
// functions do not check it. Jobs with INFINITE fast cost must carry x = 0.

#ifndef TCT_ROUNDING_H_
#define TCT_ROUNDING_H_

#include <span>
#include <vector>

#include "tct/model.h"
#include "tct/random.h"
#include "tct/thresholds.h"

namespace tct {

// Randomized d/2 rounding: draw sigma and thresholds, accelerate v iff
// x_v >= a_{l(v)}. Depth 1 uses the depth-2 thresholds of its one layer.
AccelerationSet RoundRandomized(const NormalizedInstance& norm,
                                const LayeredView& layered,
                                std::span<const Rational> x, Rng& rng);

// The rounding rule alone: accelerate v iff x_v >= thresholds[l(v)-1].
std::vector<int> RoundAtThresholds(const LayeredView& layered,
                                   std::span<const Rational> x,
                                   std::span<const Rational> thresholds);

// E[rounded_v | layer position j] for a threshold uniform on position j's
// interval: 0 below it, 1 above it, (x - 2(j-1)/d^2) d^2/2 inside.
Rational ConditionalRoundProbability(const Rational& x, int j, int d);

// rho[i-1][j-1] = sum_{v in layer i} c_v E[rounded_v | sigma(i) = j].
std::vector<std::vector<Rational>> LayerPositionCosts(
    const NormalizedInstance& norm, const LayeredView& layered,
    std::span<const Rational> x);

struct DeterministicRounding {
  AccelerationSet solution;
  std::vector<int> sigma;                // position of each layer
  std::vector<Rational> cut_levels;      // a'_i; accelerate iff x_v > a'_i
};

// Derandomized d/2 rounding. Picks sigma by a min-cost assignment on
// LayerPositionCosts, then per threshold group the cut levels a'_i from
// {x_v in layer i and in its interval} u {interval low end} with
// sum a'_i < group budget minimizing the group's cost. Cost is at most
// (d/2) sum c_v x_v.
DeterministicRounding RoundDeterministicDetailed(const NormalizedInstance& norm,
                                                 const LayeredView& layered,
                                                 std::span<const Rational> x);
AccelerationSet RoundDeterministic(const NormalizedInstance& norm,
                                   const LayeredView& layered,
                                   std::span<const Rational> x);

// s_i = min{1/d, a_i, a_i - max{x_v : v in V_i, x_v < a_i}}, where an empty
// max drops the last term.
std::vector<Rational> ComputeSlack(const LayeredView& layered,
                                   std::span<const Rational> x,
                                   std::span<const Rational> a);

// Slack-improved randomized rounding (d >= 4): after the usual draw, pick a
// layer lambda uniformly and raise a_lambda by the slack of every layer
// outside lambda's group. Expected cost <= (d/2 - d/(64n)) sum c_v x_v.
AccelerationSet RoundSlackRandomized(const NormalizedInstance& norm,
                                     const LayeredView& layered,
                                     std::span<const Rational> x, Rng& rng);

// Derandomized slack rounding (d >= 4). Costs are rounded down to multiples
// of u = d LP / (128 n^2); a knapsack-style DP over layers then picks, per
// layer, a set {x_v >= theta} (or nothing) minimizing the rounded cost
// subject to realizable thresholds with sum <= 1. Cost is at most
// (d/2 - d/(128 n)) LP.
AccelerationSet RoundSlackDeterministic(const NormalizedInstance& norm,
                                        const LayeredView& layered,
                                        std::span<const Rational> x);

// Accelerate every v with x_v >= 1/d. Cost <= d sum c_v x_v.
AccelerationSet RoundNaive(const NormalizedInstance& norm,
                           const LayeredView& layered,
                           std::span<const Rational> x);

// Primal-dual covering: repeatedly take the violated witness chain of the
// current set, lower the residual costs of its non-accelerated jobs by
// their minimum and accelerate the jobs reaching 0. Cost <= d LP.
// Throws TctError(kInfeasible) if a violated chain has only INFINITE-cost
// jobs.
AccelerationSet BarYehudaEven(const NormalizedInstance& norm);

}  // namespace tct

#endif  // TCT_ROUNDING_H_

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

// End-to-end solve: LP, then one rounding algorithm.

#ifndef TCT_SOLVER_H_
#define TCT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tct/lp_engine.h"
#include "tct/model.h"
#include "tct/random.h"

namespace tct {

enum class Algorithm {
  kDeterministic,       // "det"
  kRandomized,          // "rand"
  kSlackDeterministic,  // "slack-det"
  kSlackRandomized,     // "slack-rand"
  kNaive,               // "naive"
  kBarYehudaEven,       // "bye"
  kExact,               // "exact"
};

std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string AlgorithmName(Algorithm algorithm);
bool IsRandomized(Algorithm algorithm);

// Factor f with cost <= f * (objective of the rounded cover): d/2 for the
// plain threshold roundings (depth 1 counts as 2), d/2 - d/(128n) and
// d/2 - d/(64n) for the slack variants (the randomized ones in
// expectation), d for the baselines. Exact uses d/2 as well since the
// optimum is at most the deterministic rounding.
Rational GuaranteeFactor(Algorithm algorithm, int depth, int num_jobs);

// Slack algorithms need d >= 4 and fall back to their plain variants.
Algorithm EffectiveAlgorithm(Algorithm algorithm, int depth);

// One run of `algorithm` on cover `x`; no fallback.
AccelerationSet RunAlgorithm(Algorithm algorithm, const NormalizedInstance& norm,
                             const LayeredView& layered,
                             std::span<const Rational> x, Rng& rng,
                             const BlockerLimits& exact_limits = {});

struct SolveOptions {
  Algorithm algorithm = Algorithm::kDeterministic;
  LpOptions lp;
  std::uint64_t seed = kDefaultSeed;
  // Independent draws for randomized algorithms; the cheapest one is
  // returned (the first on ties).
  int trials = 1;
  BlockerLimits exact_limits;
};

struct SolveReport {
  AccelerationSet solution;
  FractionalCover cover;
  // Differs from the request when a slack algorithm falls back for d < 4.
  Algorithm used = Algorithm::kDeterministic;
  int depth = 0;
  int trials = 1;
  Rational mean_cost = 0;
  bool all_feasible = true;
  Rational bound = 0;  // GuaranteeFactor * cover.objective
};

SolveReport Solve(const NormalizedInstance& norm, const SolveOptions& options);

}  // namespace tct

#endif  // TCT_SOLVER_H_

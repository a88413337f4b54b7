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

#include "tct/solver.h"

#include <algorithm>
#include <array>
#include <utility>

#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/rounding.h"

namespace tct {
namespace {

constexpr std::array<std::pair<Algorithm, const char*>, 7> kNames = {{
    {Algorithm::kDeterministic, "det"},
    {Algorithm::kRandomized, "rand"},
    {Algorithm::kSlackDeterministic, "slack-det"},
    {Algorithm::kSlackRandomized, "slack-rand"},
    {Algorithm::kNaive, "naive"},
    {Algorithm::kBarYehudaEven, "bye"},
    {Algorithm::kExact, "exact"},
}};

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [algorithm, text] : kNames) {
    if (name == text) return algorithm;
  }
  return std::nullopt;
}

std::string AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, text] : kNames) {
    if (a == algorithm) return text;
  }
  return "unknown";
}

bool IsRandomized(Algorithm algorithm) {
  return algorithm == Algorithm::kRandomized ||
         algorithm == Algorithm::kSlackRandomized;
}

Rational GuaranteeFactor(Algorithm algorithm, int depth, int num_jobs) {
  const Rational d(std::max(depth, 1));
  const Rational half = Frac(std::max(depth, 2), 2);
  const Rational n(std::max(num_jobs, 1));
  switch (algorithm) {
    case Algorithm::kSlackDeterministic:
      return half - d / (128 * n);
    case Algorithm::kSlackRandomized:
      return half - d / (64 * n);
    case Algorithm::kNaive:
    case Algorithm::kBarYehudaEven:
      return d;
    default:
      return half;
  }
}

Algorithm EffectiveAlgorithm(Algorithm algorithm, int depth) {
  if (depth >= 4) return algorithm;
  if (algorithm == Algorithm::kSlackDeterministic) return Algorithm::kDeterministic;
  if (algorithm == Algorithm::kSlackRandomized) return Algorithm::kRandomized;
  return algorithm;
}

AccelerationSet RunAlgorithm(Algorithm algorithm, const NormalizedInstance& norm,
                             const LayeredView& layered,
                             std::span<const Rational> x, Rng& rng,
                             const BlockerLimits& exact_limits) {
  switch (algorithm) {
    case Algorithm::kDeterministic:
      return RoundDeterministic(norm, layered, x);
    case Algorithm::kRandomized:
      return RoundRandomized(norm, layered, x, rng);
    case Algorithm::kSlackDeterministic:
      return RoundSlackDeterministic(norm, layered, x);
    case Algorithm::kSlackRandomized:
      return RoundSlackRandomized(norm, layered, x, rng);
    case Algorithm::kNaive:
      return RoundNaive(norm, layered, x);
    case Algorithm::kBarYehudaEven:
      return BarYehudaEven(norm);
    case Algorithm::kExact:
      return ExactTctOpt(norm, exact_limits);
  }
  throw TctError(ErrorKind::kInternal, "unknown algorithm");
}

SolveReport Solve(const NormalizedInstance& norm, const SolveOptions& options) {
  if (options.trials < 1) ThrowInvalid("trials must be at least 1");
  const LayeredView layered = Layer(norm);
  SolveReport report;
  report.depth = layered.depth();
  report.used = EffectiveAlgorithm(options.algorithm, layered.depth());
  report.cover = SolveLp(norm, layered, options.lp).cover;

  Rng rng(options.seed);
  report.trials = IsRandomized(report.used) ? options.trials : 1;
  Rational total = 0;
  for (int t = 0; t < report.trials; ++t) {
    AccelerationSet sol =
        RunAlgorithm(report.used, norm, layered, report.cover.x, rng, options.exact_limits);
    if (!CheckFeasible(norm, sol).feasible) report.all_feasible = false;
    if (sol.cost.is_finite()) total += sol.cost.value();
    if (t == 0 || sol.cost < report.solution.cost) report.solution = std::move(sol);
  }
  report.mean_cost = total / report.trials;
  report.bound = GuaranteeFactor(report.used, layered.depth(), norm.num_jobs()) *
                 report.cover.objective;
  return report;
}

}  // namespace tct

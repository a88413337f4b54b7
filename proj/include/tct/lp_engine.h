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

// Vertex cover LP over the blocker of a normalized instance,
//
//   minimize sum_v c_v x_v  s.t.  sum_{v in P} x_v >= 1 for every chain P
//   with slow delay > T,  0 <= x <= 1,
//
// solved by row generation. Jobs with INFINITE fast cost are pinned to 0.

#ifndef TCT_LP_ENGINE_H_
#define TCT_LP_ENGINE_H_

#include <span>
#include <vector>

#include "tct/exact_oracle.h"
#include "tct/model.h"

namespace tct {

enum class LpMode {
  kExactSmallDepth,  // separation over the enumerated blocker
  kApprox,           // quantized fractional separation, (1+eps) scaling
};

enum class CutOrigin { kFractionalOracle, kBlockerEnumeration };

struct CutPool {
  std::vector<std::vector<int>> cuts;
  std::vector<CutOrigin> origin;
};

struct LpOptions {
  LpMode mode = LpMode::kApprox;
  Rational epsilon = Rational(1, 20);
  // Maximum number of generated cuts; 0 means 50 n.
  int max_cuts = 0;
  // Solve each round in floating point first and hand the basis to the
  // exact kernel.
  bool floating_kernel = true;
  BlockerLimits blocker_limits;
};

struct LpResult {
  FractionalCover cover;
  CutPool pool;
  // Kernel objective after each round (nondecreasing).
  std::vector<Rational> objective_history;
  int rounds = 0;
};

// Throws TctError(kResourceCap) when the cut cap is hit and
// TctError(kInfeasible) when some violated chain has no finite-cost job.
LpResult SolveLp(const NormalizedInstance& norm, const LayeredView& layered,
                 const LpOptions& options = {});

// Exact optimum of the LP restricted to the given cuts (chains of job
// indices). Cuts are added lazily, most violated first.
FractionalCover SolveCoverLp(const NormalizedInstance& norm,
                             const std::vector<std::vector<int>>& cuts,
                             bool floating_kernel = true);

// Smallest coverage sum_{v in P} x_v over the given cuts (1 if none), and
// the index of the first cut attaining it.
struct CoverageReport {
  Rational min_coverage = 1;
  int worst_cut = -1;
};
CoverageReport MinCoverage(std::span<const Rational> x,
                           const std::vector<std::vector<int>>& cuts);

}  // namespace tct

#endif  // TCT_LP_ENGINE_H_

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

#include "tct/lp_engine.h"

#include <algorithm>
#include <optional>

#include "tct/error.h"
#include "tct/lp_kernel.h"
#include "tct/separation.h"

namespace tct {
namespace {

// Row-generation state: an exact kernel over the finite-cost jobs, with an
// optional floating-point twin used to find the basis quickly.
class CoverLpSession {
 public:
  CoverLpSession(const NormalizedInstance& norm, bool floating)
      : norm_(norm), row_of_(norm.num_jobs(), -1) {
    std::vector<Rational> costs;
    std::vector<double> approx;
    for (int v = 0; v < norm.num_jobs(); ++v) {
      if (norm.fast_cost(v).is_infinite()) continue;
      row_of_[v] = static_cast<int>(job_of_.size());
      job_of_.push_back(v);
      costs.push_back(norm.fast_cost(v).value());
      approx.push_back(ToDouble(norm.fast_cost(v).value()));
    }
    exact_.emplace(std::move(costs));
    if (floating) fast_.emplace(std::move(approx));
  }

  void AddCut(const std::vector<int>& chain) {
    std::vector<int> rows;
    for (int v : chain) {
      if (row_of_[v] >= 0) rows.push_back(row_of_[v]);
    }
    if (rows.empty()) {
      std::string ids;
      for (int v : chain) ids += (ids.empty() ? "" : ", ") + norm_.id(v);
      throw TctError(ErrorKind::kInfeasible,
                     "chain {" + ids + "} exceeds the deadline and no job on it "
                     "can be accelerated");
    }
    if (fast_) fast_->AddCut(rows);
    exact_->AddCut(std::move(rows));
  }

  void Solve() {
    if (fast_) {
      try {
        fast_->Solve(1 << 20);
        exact_->TryAdoptBasis(fast_->basis());
      } catch (const TctError&) {
        fast_.reset();  // the exact kernel below decides on its own
      }
    }
    exact_->Solve();
  }

  std::vector<Rational> X() const {
    std::vector<Rational> x(norm_.num_jobs(), Rational(0));
    const std::vector<Rational> pi = exact_->Primal();
    for (std::size_t r = 0; r < job_of_.size(); ++r) x[job_of_[r]] = pi[r];
    return x;
  }

  Rational Objective() const { return exact_->Objective(); }

 private:
  const NormalizedInstance& norm_;
  std::vector<int> row_of_;
  std::vector<int> job_of_;
  std::optional<CoverLpKernel<Rational>> exact_;
  std::optional<CoverLpKernel<double>> fast_;
};

FractionalCover MakeCover(const NormalizedInstance& norm, std::vector<Rational> x,
                          CoverQuality quality, const Rational& epsilon) {
  FractionalCover cover;
  cover.objective = CoverObjective(norm, x);
  cover.x = std::move(x);
  cover.quality = quality;
  cover.epsilon = quality == CoverQuality::kApprox ? epsilon : Rational(0);
  return cover;
}

}  // namespace

CoverageReport MinCoverage(std::span<const Rational> x,
                           const std::vector<std::vector<int>>& cuts) {
  CoverageReport report;
  for (int i = 0; i < static_cast<int>(cuts.size()); ++i) {
    Rational sum = 0;
    for (int v : cuts[i]) sum += x[v];
    if (report.worst_cut < 0 || sum < report.min_coverage) {
      report.min_coverage = sum;
      report.worst_cut = i;
    }
  }
  return report;
}

FractionalCover SolveCoverLp(const NormalizedInstance& norm,
                             const std::vector<std::vector<int>>& cuts,
                             bool floating_kernel) {
  CoverLpSession session(norm, floating_kernel);
  std::vector<char> added(cuts.size(), 0);
  std::vector<Rational> x(norm.num_jobs(), Rational(0));
  while (true) {
    const CoverageReport worst = MinCoverage(x, cuts);
    if (worst.worst_cut < 0 || worst.min_coverage >= 1) break;
    if (added[worst.worst_cut]) {
      throw TctError(ErrorKind::kInternal, "kernel optimum violates one of its cuts");
    }
    added[worst.worst_cut] = 1;
    session.AddCut(cuts[worst.worst_cut]);
    session.Solve();
    x = session.X();
  }
  return MakeCover(norm, std::move(x), CoverQuality::kExact, 0);
}

LpResult SolveLp(const NormalizedInstance& norm, const LayeredView& layered,
                 const LpOptions& options) {
  const bool approx = options.mode == LpMode::kApprox;
  if (approx && (options.epsilon <= 0 || options.epsilon > 1)) {
    ThrowInvalid("epsilon must lie in (0, 1]");
  }
  const int cap = options.max_cuts > 0 ? options.max_cuts
                                       : std::max(1, 50 * norm.num_jobs());
  std::vector<std::vector<int>> blocker;
  if (!approx) blocker = EnumerateBlocker(norm, options.blocker_limits);

  LpResult result;
  CoverLpSession session(norm, options.floating_kernel);
  std::vector<Rational> x(norm.num_jobs(), Rational(0));
  std::vector<char> added(blocker.size(), 0);
  while (true) {
    std::vector<int> cut;
    CutOrigin origin;
    if (approx) {
      SeparationResult sep =
          SeparateFractional(norm, layered, x, options.epsilon);
      if (sep.accepted) break;
      cut = ShrinkCut(norm, std::move(sep.cut));
      origin = CutOrigin::kFractionalOracle;
    } else {
      const CoverageReport worst = MinCoverage(x, blocker);
      if (worst.worst_cut < 0 || worst.min_coverage >= 1) break;
      if (added[worst.worst_cut]) {
        throw TctError(ErrorKind::kInternal, "kernel optimum violates one of its cuts");
      }
      added[worst.worst_cut] = 1;
      cut = blocker[worst.worst_cut];
      origin = CutOrigin::kBlockerEnumeration;
    }
    if (static_cast<int>(result.pool.cuts.size()) >= cap) {
      throw TctError(ErrorKind::kResourceCap,
                     "cut cap of " + std::to_string(cap) +
                         " reached; last violated chain has " +
                         std::to_string(cut.size()) + " jobs");
    }
    session.AddCut(cut);
    result.pool.cuts.push_back(std::move(cut));
    result.pool.origin.push_back(origin);
    session.Solve();
    x = session.X();
    result.objective_history.push_back(session.Objective());
    ++result.rounds;
  }

  if (approx) {
    const Rational scale = 1 + options.epsilon;
    for (Rational& value : x) value = std::min(Rational(1), Rational(value * scale));
    result.cover = MakeCover(norm, std::move(x), CoverQuality::kApprox,
                             options.epsilon);
  } else {
    result.cover = MakeCover(norm, std::move(x), CoverQuality::kExact, 0);
  }
  return result;
}

}  // namespace tct

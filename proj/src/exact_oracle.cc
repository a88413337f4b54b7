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

#include "tct/exact_oracle.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "tct/error.h"
#include "tct/feasibility.h"
#include "tct/lp_engine.h"

namespace tct {
namespace {

void CheckBlockerLimits(const NormalizedInstance& norm,
                        const BlockerLimits& limits) {
  if (norm.num_jobs() <= limits.max_jobs) return;
  if (norm.dag().depth() <= limits.max_depth) return;
  throw TctError(ErrorKind::kResourceCap,
                 "instance too large for blocker enumeration (n=" +
                     std::to_string(norm.num_jobs()) +
                     ", d=" + std::to_string(norm.dag().depth()) + ")");
}

// Integer costs on a common denominator.
std::vector<std::int64_t> ScaleCosts(const std::vector<Rational>& costs) {
  mpz_class lcm = 1;
  for (const Rational& c : costs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                          c.get_den_mpz_t());
  std::vector<std::int64_t> scaled;
  scaled.reserve(costs.size());
  const mpz_class limit = mpz_class(1) << 50;
  mpz_class total = 0;
  for (const Rational& c : costs) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    total += v;
    if (total > limit) {
      throw TctError(ErrorKind::kResourceCap, "costs too fine for the exact search");
    }
    scaled.push_back(v.get_si());
  }
  return scaled;
}

class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::int64_t> cost,
                   std::vector<std::vector<int>> sets, std::int64_t max_nodes)
      : cost_(std::move(cost)), sets_(std::move(sets)), max_nodes_(max_nodes) {
    const int m = static_cast<int>(cost_.size());
    sets_of_.resize(m);
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
      for (int e : sets_[s]) sets_of_[e].push_back(s);
    }
    state_.assign(m, kOpen);
    hits_.assign(sets_.size(), 0);
  }

  std::vector<int> Run(std::int64_t* nodes) {
    Greedy();
    Search(0);
    *nodes = nodes_;
    return best_;
  }

 private:
  static constexpr char kOpen = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  void Greedy() {
    std::vector<char> covered(sets_.size(), 0);
    std::vector<int> chosen;
    std::int64_t total = 0;
    while (true) {
      int pick = -1;
      int pick_gain = 0;
      for (int e = 0; e < static_cast<int>(cost_.size()); ++e) {
        int gain = 0;
        for (int s : sets_of_[e]) gain += !covered[s];
        if (gain == 0) continue;
        // cost[e]/gain < cost[pick]/pick_gain
        if (pick < 0 || static_cast<__int128>(cost_[e]) * pick_gain <
                            static_cast<__int128>(cost_[pick]) * gain) {
          pick = e;
          pick_gain = gain;
        }
      }
      if (pick < 0) break;
      chosen.push_back(pick);
      total += cost_[pick];
      for (int s : sets_of_[pick]) covered[s] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    best_ = std::move(chosen);
    best_cost_ = total;
  }

  // Lower bound on the cost still needed: a greedy packing of uncovered sets
  // with pairwise disjoint open elements, each contributing its cheapest
  // open element.
  std::int64_t PackingBound(const std::vector<int>& uncovered) {
    std::vector<std::pair<int, int>> order;  // (open elements, set)
    order.reserve(uncovered.size());
    for (int s : uncovered) {
      int open = 0;
      for (int e : sets_[s]) open += state_[e] == kOpen;
      order.emplace_back(open, s);
    }
    std::sort(order.begin(), order.end());
    marked_.assign(cost_.size(), 0);
    std::int64_t bound = 0;
    for (const auto& [open, s] : order) {
      bool clash = false;
      std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
      for (int e : sets_[s]) {
        if (state_[e] != kOpen) continue;
        if (marked_[e]) {
          clash = true;
          break;
        }
        cheapest = std::min(cheapest, cost_[e]);
      }
      if (clash || open == 0) continue;
      for (int e : sets_[s]) {
        if (state_[e] == kOpen) marked_[e] = 1;
      }
      bound += cheapest;
    }
    return bound;
  }

  void Search(std::int64_t cost) {
    if (++nodes_ > max_nodes_) {
      throw TctError(ErrorKind::kResourceCap, "hitting set search node cap exceeded");
    }
    std::vector<int> uncovered;
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
      if (hits_[s] == 0) uncovered.push_back(s);
    }
    if (uncovered.empty()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_.clear();
        for (int e = 0; e < static_cast<int>(state_.size()); ++e) {
          if (state_[e] == kIn) best_.push_back(e);
        }
      }
      return;
    }
    if (cost + PackingBound(uncovered) >= best_cost_) return;

    int branch = -1;
    int fewest = std::numeric_limits<int>::max();
    for (int s : uncovered) {
      int open = 0;
      for (int e : sets_[s]) open += state_[e] == kOpen;
      if (open < fewest) {
        fewest = open;
        branch = s;
      }
    }
    if (fewest == 0) return;

    std::vector<std::pair<int, int>> candidates;  // (element, uncovered hits)
    for (int e : sets_[branch]) {
      if (state_[e] != kOpen) continue;
      int gain = 0;
      for (int s : sets_of_[e]) gain += hits_[s] == 0;
      candidates.emplace_back(e, gain);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& a, const auto& b) {
                       const __int128 lhs = static_cast<__int128>(cost_[a.first]) * b.second;
                       const __int128 rhs = static_cast<__int128>(cost_[b.first]) * a.second;
                       if (lhs != rhs) return lhs < rhs;
                       return a.first < b.first;
                     });

    std::vector<int> excluded;
    for (const auto& [e, gain] : candidates) {
      state_[e] = kIn;
      for (int s : sets_of_[e]) ++hits_[s];
      Search(cost + cost_[e]);
      for (int s : sets_of_[e]) --hits_[s];
      state_[e] = kOut;
      excluded.push_back(e);
    }
    for (int e : excluded) state_[e] = kOpen;
  }

  std::vector<std::int64_t> cost_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> sets_of_;
  std::vector<char> state_;
  std::vector<int> hits_;
  std::vector<char> marked_;
  std::vector<int> best_;
  std::int64_t best_cost_ = 0;
  std::int64_t nodes_ = 0;
  std::int64_t max_nodes_;
};

}  // namespace

std::vector<std::vector<int>> EnumerateBlocker(const NormalizedInstance& norm,
                                               const BlockerLimits& limits) {
  CheckBlockerLimits(norm, limits);
  const int n = norm.num_jobs();
  const Dag& dag = norm.dag();
  const Extended deadline(norm.deadline());
  std::vector<std::vector<int>> closure(n);
  for (int v = 0; v < n; ++v) {
    for (int w : dag.ClosureSuccessors(v)) {
      if (norm.slow_delay(w) > Extended(0)) closure[v].push_back(w);
    }
  }

  std::vector<std::vector<int>> blocker;
  std::vector<int> chain;
  std::int64_t visited = 0;
  // Members of a minimal chain all have positive delay, and once the sum
  // exceeds T every extension is non-minimal.
  std::function<void(int, const Extended&, const Extended&)> grow =
      [&](int v, const Extended& sum, const Extended& smallest) {
        if (++visited > limits.max_chains) {
          throw TctError(ErrorKind::kResourceCap, "blocker enumeration cap exceeded");
        }
        chain.push_back(v);
        if (sum > deadline) {
          bool minimal;
          if (sum.is_infinite()) {
            minimal = chain.size() == 1;
          } else {
            minimal = Extended(sum.value() - smallest.value()) <= deadline;
          }
          if (minimal) blocker.push_back(chain);
        } else {
          for (int w : closure[v]) {
            grow(w, sum + norm.slow_delay(w),
                 std::min(smallest, norm.slow_delay(w)));
          }
        }
        chain.pop_back();
      };
  for (int v = 0; v < n; ++v) {
    if (norm.slow_delay(v) > Extended(0)) {
      grow(v, norm.slow_delay(v), norm.slow_delay(v));
    }
  }
  std::sort(blocker.begin(), blocker.end());
  return blocker;
}

HittingSetResult MinCostHittingSet(const std::vector<Extended>& costs,
                                   const std::vector<std::vector<int>>& sets,
                                   std::int64_t max_nodes) {
  // Compress to finite-cost elements.
  std::vector<int> local(costs.size(), -1);
  std::vector<int> global;
  std::vector<Rational> finite;
  for (int e = 0; e < static_cast<int>(costs.size()); ++e) {
    if (costs[e].is_finite()) {
      local[e] = static_cast<int>(global.size());
      global.push_back(e);
      finite.push_back(costs[e].value());
    }
  }
  std::vector<std::vector<int>> reduced;
  reduced.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<int> members;
    for (int e : set) {
      if (e < 0 || e >= static_cast<int>(costs.size())) {
        ThrowInvalid("hitting set element out of range");
      }
      if (local[e] >= 0) members.push_back(local[e]);
    }
    if (members.empty()) {
      throw TctError(ErrorKind::kInfeasible,
                     "a set has no finite-cost element; no finite solution");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    reduced.push_back(std::move(members));
  }
  HittingSetSearch search(ScaleCosts(finite), std::move(reduced), max_nodes);
  HittingSetResult result;
  for (int e : search.Run(&result.nodes)) result.elements.push_back(global[e]);
  result.cost = 0;
  for (int e : result.elements) result.cost += costs[e].value();
  return result;
}

AccelerationSet ExactTctOpt(const NormalizedInstance& norm,
                            const BlockerLimits& limits) {
  const auto blocker = EnumerateBlocker(norm, limits);
  HittingSetResult hs = MinCostHittingSet(norm.fast_costs(), blocker);
  AccelerationSet sol = MakeAccelerationSet(norm, std::move(hs.elements));
  if (!CheckFeasible(norm, sol).feasible) {
    throw TctError(ErrorKind::kInternal, "exact optimum failed the feasibility check");
  }
  return sol;
}

std::vector<int> ExactDvdOpt(const DvdInstance& dvd, int max_vertices) {
  if (dvd.num_vertices() > max_vertices) {
    throw TctError(ErrorKind::kResourceCap, "DVD instance too large for exact search");
  }
  const auto paths = KVertexPaths(dvd.dag(), dvd.k());
  std::vector<Extended> unit(dvd.num_vertices(), Extended(1));
  return MinCostHittingSet(unit, paths).elements;
}

FractionalCover ExactLpOpt(const NormalizedInstance& norm,
                           const BlockerLimits& limits) {
  return SolveCoverLp(norm, EnumerateBlocker(norm, limits));
}

GeneralOptimum ExactGeneralOpt(const TctInstance& instance,
                               std::int64_t max_combinations) {
  const int n = instance.num_jobs();
  std::int64_t combos = 1;
  for (const Job& job : instance.jobs()) {
    combos *= static_cast<std::int64_t>(job.alternatives.size());
    if (combos > max_combinations) {
      throw TctError(ErrorKind::kResourceCap, "too many alternative combinations");
    }
  }
  GeneralOptimum best;
  best.cost = Extended::Infinite();
  std::vector<int> choice(n, 0);
  while (true) {
    const ChoiceReport report = EvaluateChoice(instance, choice);
    if (report.feasible && report.cost.is_finite() &&
        (!best.feasible || report.cost < best.cost)) {
      best.feasible = true;
      best.cost = report.cost;
      best.choice = choice;
    }
    int v = n - 1;
    while (v >= 0) {
      if (++choice[v] < static_cast<int>(instance.job(v).alternatives.size())) break;
      choice[v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return best;
}

}  // namespace tct

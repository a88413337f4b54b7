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

#include "tct/rounding.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "tct/assignment.h"
#include "tct/error.h"
#include "tct/feasibility.h"

namespace tct {
namespace {

// Thresholds need at least two positions; a depth-1 instance is rounded as
// if a second, empty layer existed.
int EffectiveDepth(const LayeredView& layered) {
  return std::max(2, layered.depth());
}

const std::vector<int>& LayerOrEmpty(const LayeredView& layered, int i) {
  static const std::vector<int> kEmpty;
  return i <= layered.depth() ? layered.layer(i) : kEmpty;
}

void CheckInput(const NormalizedInstance& norm, const LayeredView& layered,
                std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != norm.num_jobs() ||
      layered.num_jobs() != norm.num_jobs()) {
    ThrowInvalid("cover does not match the instance");
  }
  for (int v = 0; v < norm.num_jobs(); ++v) {
    if (x[v] < 0 || x[v] > 1) ThrowInvalid("cover value outside [0,1]");
    if (norm.fast_cost(v).is_infinite() && x[v] != 0) {
      ThrowInvalid("job '" + norm.id(v) + "' cannot be accelerated but has x > 0");
    }
  }
}

// Distinct x-values of a layer, ascending.
std::vector<Rational> DistinctValues(const std::vector<int>& layer,
                                     std::span<const Rational> x) {
  std::vector<Rational> values;
  for (int v : layer) values.push_back(x[v]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Rational FiniteObjective(const NormalizedInstance& norm,
                         std::span<const Rational> x) {
  Rational total = 0;
  for (int v = 0; v < norm.num_jobs(); ++v) {
    if (norm.fast_cost(v).is_finite()) total += norm.fast_cost(v).value() * x[v];
  }
  return total;
}

}  // namespace

std::vector<int> RoundAtThresholds(const LayeredView& layered,
                                   std::span<const Rational> x,
                                   std::span<const Rational> thresholds) {
  std::vector<int> fast;
  for (int v = 0; v < layered.num_jobs(); ++v) {
    if (x[v] >= thresholds[layered.level(v) - 1]) fast.push_back(v);
  }
  return fast;
}

AccelerationSet RoundRandomized(const NormalizedInstance& norm,
                                const LayeredView& layered,
                                std::span<const Rational> x, Rng& rng) {
  CheckInput(norm, layered, x);
  if (norm.num_jobs() == 0) return AccelerationSet{{}, Extended(0)};
  const ThresholdAssignment assignment = SampleAssignment(EffectiveDepth(layered), rng);
  return MakeAccelerationSet(norm, RoundAtThresholds(layered, x, assignment.a));
}

Rational ConditionalRoundProbability(const Rational& x, int j, int d) {
  const Rational low = IntervalLow(j, d);
  if (x < low) return 0;
  if (x > IntervalHigh(j, d)) return 1;
  return (x - low) * Frac(d * d, 2);
}

std::vector<std::vector<Rational>> LayerPositionCosts(
    const NormalizedInstance& norm, const LayeredView& layered,
    std::span<const Rational> x) {
  const int d = EffectiveDepth(layered);
  std::vector<std::vector<Rational>> rho(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 1; i <= d; ++i) {
    for (int v : LayerOrEmpty(layered, i)) {
      if (x[v] == 0) continue;  // also covers INFINITE-cost jobs
      const Rational& c = norm.fast_cost(v).value();
      for (int j = 1; j <= d; ++j) {
        rho[i - 1][j - 1] += c * ConditionalRoundProbability(x[v], j, d);
      }
    }
  }
  return rho;
}

DeterministicRounding RoundDeterministicDetailed(const NormalizedInstance& norm,
                                                 const LayeredView& layered,
                                                 std::span<const Rational> x) {
  CheckInput(norm, layered, x);
  DeterministicRounding result;
  if (norm.num_jobs() == 0) {
    result.solution = AccelerationSet{{}, Extended(0)};
    return result;
  }
  const int d = EffectiveDepth(layered);
  const std::vector<int> column = SolveAssignment(LayerPositionCosts(norm, layered, x));
  result.sigma.resize(d);
  std::vector<int> layer_at(d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    result.sigma[i - 1] = column[i - 1] + 1;
    layer_at[column[i - 1] + 1] = i;
  }
  result.cut_levels.assign(d, Rational(0));

  for (const auto& group : ThresholdGroups(d)) {
    const Rational budget = GroupBudget(group, d);
    // Per layer of the group: candidate cut levels with the cost they incur.
    std::vector<int> layers;
    std::vector<std::vector<std::pair<Rational, Extended>>> options;
    for (int p : group) {
      const int i = layer_at[p];
      const Rational low = IntervalLow(p, d);
      const Rational high = IntervalHigh(p, d);
      std::vector<Rational> levels = {low};
      for (const Rational& value : DistinctValues(LayerOrEmpty(layered, i), x)) {
        if (value > low && value <= high) levels.push_back(value);
      }
      std::vector<std::pair<Rational, Extended>> layer_options;
      for (const Rational& level : levels) {
        Extended cost(0);
        for (int v : LayerOrEmpty(layered, i)) {
          if (x[v] > level) cost += norm.fast_cost(v);
        }
        layer_options.emplace_back(level, cost);
      }
      layers.push_back(i);
      options.push_back(std::move(layer_options));
    }
    // Exhaustive search over the (at most cubic) combinations.
    std::vector<int> pick(layers.size(), 0);
    std::vector<int> best_pick;
    Extended best_cost = Extended::Infinite();
    while (true) {
      Rational sum = 0;
      Extended cost(0);
      for (std::size_t k = 0; k < layers.size(); ++k) {
        sum += options[k][pick[k]].first;
        cost += options[k][pick[k]].second;
      }
      if (sum < budget && (best_pick.empty() || cost < best_cost)) {
        best_pick = pick;
        best_cost = cost;
      }
      int k = static_cast<int>(layers.size()) - 1;
      while (k >= 0 && ++pick[k] == static_cast<int>(options[k].size())) {
        pick[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
    if (best_pick.empty()) {
      throw TctError(ErrorKind::kInternal, "no admissible cut levels in a group");
    }
    for (std::size_t k = 0; k < layers.size(); ++k) {
      result.cut_levels[layers[k] - 1] = options[k][best_pick[k]].first;
    }
  }

  std::vector<int> fast;
  for (int v = 0; v < norm.num_jobs(); ++v) {
    if (x[v] > result.cut_levels[layered.level(v) - 1]) fast.push_back(v);
  }
  result.solution = MakeAccelerationSet(norm, std::move(fast));
  return result;
}

AccelerationSet RoundDeterministic(const NormalizedInstance& norm,
                                   const LayeredView& layered,
                                   std::span<const Rational> x) {
  return RoundDeterministicDetailed(norm, layered, x).solution;
}

std::vector<Rational> ComputeSlack(const LayeredView& layered,
                                   std::span<const Rational> x,
                                   std::span<const Rational> a) {
  const int d = static_cast<int>(a.size());
  std::vector<Rational> slack(d);
  for (int i = 1; i <= d; ++i) {
    const Rational& threshold = a[i - 1];
    Rational s = std::min(Rational(1, d), threshold);
    std::optional<Rational> below;
    for (int v : LayerOrEmpty(layered, i)) {
      if (x[v] < threshold && (!below || x[v] > *below)) below = x[v];
    }
    if (below) s = std::min(s, Rational(threshold - *below));
    slack[i - 1] = s;
  }
  return slack;
}

AccelerationSet RoundSlackRandomized(const NormalizedInstance& norm,
                                     const LayeredView& layered,
                                     std::span<const Rational> x, Rng& rng) {
  CheckInput(norm, layered, x);
  const int d = layered.depth();
  if (d < 4) ThrowInvalid("slack rounding needs depth at least 4");
  ThresholdAssignment assignment = SampleAssignment(d, rng);
  const std::vector<Rational> slack = ComputeSlack(layered, x, assignment.a);
  const int lambda = static_cast<int>(rng.UniformInt(1, d));
  const std::vector<int> group = assignment.GroupOfLayer(lambda);
  Rational raise = 0;
  for (int i = 1; i <= d; ++i) {
    if (std::find(group.begin(), group.end(), i) == group.end()) raise += slack[i - 1];
  }
  std::vector<Rational> raised = assignment.a;
  raised[lambda - 1] += raise;
  return MakeAccelerationSet(norm, RoundAtThresholds(layered, x, raised));
}

namespace {

// One way to treat a layer: accelerate {x_v >= theta} for one of its
// distinct values theta, or nothing. `budget` is the infimum of thresholds
// realizing the choice; `open` marks an infimum that is not attained.
struct LayerChoice {
  std::vector<int> fast;
  std::int64_t cost_units = 0;
  Rational budget;
  bool open = false;
};

template <typename Budget>
struct DpEntry {
  Budget sum;
  bool open = false;
  int choice = -1;
  std::int64_t previous = 0;
};

template <typename Budget>
bool Better(const Budget& sum, bool open, const DpEntry<Budget>& incumbent) {
  if (sum != incumbent.sum) return sum < incumbent.sum;
  return !open && incumbent.open;
}

// Minimum-cost admissible selection of one choice per layer; returns the
// chosen index per layer, or nullopt if no selection is admissible.
template <typename Budget>
std::optional<std::vector<int>> SolveLayerDp(
    const std::vector<std::vector<LayerChoice>>& choices,
    const std::vector<std::vector<Budget>>& budgets, const Budget& one,
    std::int64_t cap) {
  const int d = static_cast<int>(choices.size());
  std::vector<std::map<std::int64_t, DpEntry<Budget>>> table(d + 1);
  table[0].emplace(0, DpEntry<Budget>{Budget(0), false, -1, 0});
  for (int i = 0; i < d; ++i) {
    for (const auto& [cost, entry] : table[i]) {
      for (int k = 0; k < static_cast<int>(choices[i].size()); ++k) {
        const LayerChoice& choice = choices[i][k];
        const std::int64_t next_cost = cost + choice.cost_units;
        if (next_cost > cap) continue;
        Budget sum = entry.sum + budgets[i][k];
        if (one < sum) continue;
        const bool open = entry.open || choice.open;
        auto [it, inserted] = table[i + 1].try_emplace(next_cost);
        if (inserted || Better(sum, open, it->second)) {
          it->second = DpEntry<Budget>{std::move(sum), open, k, cost};
        }
      }
    }
  }
  for (const auto& [cost, entry] : table[d]) {
    if (entry.sum < one || !entry.open) {
      std::vector<int> picks(d);
      std::int64_t at = cost;
      for (int i = d; i >= 1; --i) {
        const DpEntry<Budget>& e = table[i].at(at);
        picks[i - 1] = e.choice;
        at = e.previous;
      }
      return picks;
    }
  }
  return std::nullopt;
}

}  // namespace

AccelerationSet RoundSlackDeterministic(const NormalizedInstance& norm,
                                        const LayeredView& layered,
                                        std::span<const Rational> x) {
  CheckInput(norm, layered, x);
  const int d = layered.depth();
  if (d < 4) ThrowInvalid("slack rounding needs depth at least 4");
  const int n = norm.num_jobs();
  const Rational lp = FiniteObjective(norm, x);
  if (lp == 0) {
    std::vector<int> fast;
    for (int v = 0; v < n; ++v) {
      if (x[v] > 0) fast.push_back(v);
    }
    return MakeAccelerationSet(norm, std::move(fast));
  }
  const Rational n2(static_cast<long>(n) * n);
  const Rational unit = d * lp / (128 * n2);
  const std::int64_t cap = 64 * static_cast<std::int64_t>(n) * n;

  std::vector<std::int64_t> units(n, 0);
  for (int v = 0; v < n; ++v) {
    if (norm.fast_cost(v).is_infinite()) continue;
    const Rational q = Floor(norm.fast_cost(v).value() / unit);
    units[v] = q > cap ? cap + 1 : q.get_num().get_si();
  }

  std::vector<std::vector<LayerChoice>> choices(d);
  mpz_class lcm = 1;
  for (int i = 1; i <= d; ++i) {
    const std::vector<int>& layer = layered.layer(i);
    const std::vector<Rational> values = DistinctValues(layer, x);
    for (std::size_t k = 0; k < values.size(); ++k) {
      LayerChoice choice;
      bool finite = true;
      for (int v : layer) {
        if (x[v] < values[k]) continue;
        if (norm.fast_cost(v).is_infinite()) finite = false;
        choice.fast.push_back(v);
        choice.cost_units = std::min(cap + 1, choice.cost_units + units[v]);
      }
      if (!finite) continue;
      choice.budget = k == 0 ? Rational(0) : values[k - 1];
      choice.open = k > 0;
      choices[i - 1].push_back(std::move(choice));
    }
    LayerChoice nothing;
    if (!values.empty()) {
      nothing.budget = values.back();
      nothing.open = true;
    }
    choices[i - 1].push_back(std::move(nothing));
    for (const Rational& value : values) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den_mpz_t());
    }
  }

  std::optional<std::vector<int>> picks;
  if (lcm * (d + 1) < (mpz_class(1) << 62)) {
    // Budgets on the common denominator fit in 64-bit integers.
    const std::int64_t scale = lcm.get_si();
    std::vector<std::vector<std::int64_t>> budgets(d);
    for (int i = 0; i < d; ++i) {
      for (const LayerChoice& choice : choices[i]) {
        const Rational scaled = choice.budget * scale;
        budgets[i].push_back(scaled.get_num().get_si());
      }
    }
    picks = SolveLayerDp<std::int64_t>(choices, budgets, scale, cap);
  } else {
    std::vector<std::vector<Rational>> budgets(d);
    for (int i = 0; i < d; ++i) {
      for (const LayerChoice& choice : choices[i]) budgets[i].push_back(choice.budget);
    }
    picks = SolveLayerDp<Rational>(choices, budgets, Rational(1), cap);
  }
  if (!picks) return RoundDeterministic(norm, layered, x);
  std::vector<int> fast;
  for (int i = 0; i < d; ++i) {
    const LayerChoice& choice = choices[i][(*picks)[i]];
    fast.insert(fast.end(), choice.fast.begin(), choice.fast.end());
  }
  return MakeAccelerationSet(norm, std::move(fast));
}

AccelerationSet RoundNaive(const NormalizedInstance& norm,
                           const LayeredView& layered,
                           std::span<const Rational> x) {
  CheckInput(norm, layered, x);
  std::vector<int> fast;
  if (layered.depth() > 0) {
    const Rational bar(1, layered.depth());
    for (int v = 0; v < norm.num_jobs(); ++v) {
      if (x[v] >= bar) fast.push_back(v);
    }
  }
  return MakeAccelerationSet(norm, std::move(fast));
}

AccelerationSet BarYehudaEven(const NormalizedInstance& norm) {
  const int n = norm.num_jobs();
  std::vector<Extended> residual = norm.fast_costs();
  std::vector<char> is_fast(n, 0);
  std::vector<int> fast;
  while (true) {
    const FeasibilityReport report = CheckFeasible(norm, fast);
    if (report.feasible) break;
    std::optional<Rational> delta;
    for (int v : report.violated_chain) {
      if (residual[v].is_finite() && (!delta || residual[v].value() < *delta)) {
        delta = residual[v].value();
      }
    }
    if (!delta) {
      throw TctError(ErrorKind::kInfeasible,
                     "a chain exceeds the deadline even with every finite-cost "
                     "job accelerated");
    }
    for (int v : report.violated_chain) {
      if (residual[v].is_infinite()) continue;
      residual[v] = Extended(residual[v].value() - *delta);
      if (residual[v] == Extended(0) && !is_fast[v]) {
        is_fast[v] = 1;
        fast.push_back(v);
      }
    }
  }
  return MakeAccelerationSet(norm, std::move(fast));
}

}  // namespace tct

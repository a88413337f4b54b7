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

#include "tct/model.h"

#include <algorithm>
#include <string>

#include "tct/error.h"

namespace tct {

TctInstance::TctInstance(
    std::vector<Job> jobs,
    const std::vector<std::pair<std::string, std::string>>& edges,
    Rational deadline)
    : jobs_(std::move(jobs)), deadline_(std::move(deadline)) {
  if (deadline_ <= 0) ThrowInvalid("deadline must be strictly positive");
  std::sort(jobs_.begin(), jobs_.end(),
            [](const Job& a, const Job& b) { return a.id < b.id; });
  for (int v = 0; v < num_jobs(); ++v) {
    const Job& job = jobs_[v];
    if (!index_.emplace(job.id, v).second) {
      ThrowInvalid("duplicate job id '" + job.id + "'");
    }
    if (job.alternatives.empty()) {
      ThrowInvalid("job '" + job.id + "' has no alternatives");
    }
    for (const Alternative& alt : job.alternatives) {
      if (alt.delay < Extended(0) || alt.cost < Extended(0)) {
        ThrowInvalid("job '" + job.id + "' has a negative delay or cost");
      }
    }
  }
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [from, to] : edges) {
    indexed.emplace_back(IndexOf(from), IndexOf(to));
  }
  dag_ = Dag(num_jobs(), std::move(indexed));
}

std::optional<int> TctInstance::FindIndex(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TctInstance::IndexOf(std::string_view id) const {
  auto v = FindIndex(id);
  if (!v) ThrowInvalid("unknown job id '" + std::string(id) + "'");
  return *v;
}

std::vector<std::pair<std::string, std::string>> TctInstance::EdgeIds() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(dag_.edges().size());
  for (const auto& [u, v] : dag_.edges()) out.emplace_back(id(u), id(v));
  return out;
}

NormalizedInstance::NormalizedInstance(
    TctInstance base,
    std::optional<std::unordered_map<std::string, OriginEntry>> origin)
    : base_(std::move(base)) {
  const int n = base_.num_jobs();
  slow_delay_.resize(n);
  fast_cost_.resize(n);
  const Extended zero(0);
  for (int v = 0; v < n; ++v) {
    const auto& alts = base_.job(v).alternatives;
    if (alts.size() != 2) {
      ThrowInvalid("normalized job '" + base_.id(v) +
                   "' must have exactly two alternatives");
    }
    if (alts[0].delay == zero && alts[1].cost == zero) {
      fast_cost_[v] = alts[0].cost;
      slow_delay_[v] = alts[1].delay;
    } else if (alts[1].delay == zero && alts[0].cost == zero) {
      fast_cost_[v] = alts[1].cost;
      slow_delay_[v] = alts[0].delay;
    } else {
      ThrowInvalid("job '" + base_.id(v) +
                   "' is not of the form {(0,c),(t,0)}");
    }
  }
  if (origin) {
    std::vector<OriginEntry> by_index(n);
    for (int v = 0; v < n; ++v) {
      auto it = origin->find(base_.id(v));
      if (it == origin->end()) {
        ThrowInvalid("origin map does not cover job '" + base_.id(v) + "'");
      }
      by_index[v] = it->second;
    }
    origin_ = std::move(by_index);
  }
}

NormalizedInstance NormalizedInstance::Create(
    std::vector<NormalizedJob> jobs,
    const std::vector<std::pair<std::string, std::string>>& edges,
    Rational deadline,
    std::optional<std::unordered_map<std::string, OriginEntry>> origin) {
  std::vector<Job> base_jobs;
  base_jobs.reserve(jobs.size());
  for (NormalizedJob& job : jobs) {
    base_jobs.push_back(
        Job{std::move(job.id),
            {Alternative{Extended(0), job.fast_cost},
             Alternative{job.slow_delay, Extended(0)}}});
  }
  return NormalizedInstance(
      TctInstance(std::move(base_jobs), edges, std::move(deadline)),
      std::move(origin));
}

LayeredView::LayeredView(std::vector<int> level, int depth)
    : level_(std::move(level)), depth_(depth) {
  layers_.assign(depth_, {});
  for (int v = 0; v < static_cast<int>(level_.size()); ++v) {
    if (level_[v] < 1 || level_[v] > depth_) {
      ThrowInvalid("level out of range for job " + std::to_string(v));
    }
    layers_[level_[v] - 1].push_back(v);
  }
}

Rational CoverObjective(const NormalizedInstance& norm,
                        const std::vector<Rational>& x) {
  Rational total = 0;
  for (int v = 0; v < norm.num_jobs(); ++v) {
    if (x[v] == 0) continue;
    if (norm.fast_cost(v).is_infinite()) {
      ThrowInvalid("positive x on INFINITE-cost job '" + norm.id(v) + "'");
    }
    total += norm.fast_cost(v).value() * x[v];
  }
  return total;
}

}  // namespace tct

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

#include "tct/normalize.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "tct/error.h"

namespace tct {

std::vector<ParetoPair> NondominatedPairs(const Job& job) {
  if (job.alternatives.empty()) {
    ThrowInvalid("job '" + job.id + "' has no alternatives");
  }
  std::vector<ParetoPair> pairs;
  for (int a = 0; a < static_cast<int>(job.alternatives.size()); ++a) {
    pairs.push_back({job.alternatives[a].delay, job.alternatives[a].cost, a});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const ParetoPair& p, const ParetoPair& q) {
                     if (p.delay != q.delay) return p.delay < q.delay;
                     return p.cost < q.cost;
                   });
  std::vector<ParetoPair> kept;
  for (const ParetoPair& p : pairs) {
    if (kept.empty() || p.cost < kept.back().cost) kept.push_back(p);
  }
  return kept;
}

std::string CopyId(const std::string& original_id, int copy_index) {
  return original_id + "#" + std::to_string(copy_index);
}

NormalizedInstance Normalize(const TctInstance& instance) {
  std::vector<NormalizedJob> jobs;
  std::unordered_map<std::string, OriginEntry> origin;
  std::vector<std::vector<std::string>> copies(instance.num_jobs());

  for (int v = 0; v < instance.num_jobs(); ++v) {
    const Job& job = instance.job(v);
    const std::vector<ParetoPair> pairs = NondominatedPairs(job);
    const int r = static_cast<int>(pairs.size());
    // 1-based views with the sentinels c_0, c_{r+1}, t_{r+1}.
    auto cost = [&](int i) -> Extended {
      if (i == 0) return Extended::Infinite();
      if (i == r + 1) return Extended(0);
      return pairs[i - 1].cost;
    };
    auto delay = [&](int i) -> Extended {
      if (i == r + 1) return Extended::Infinite();
      return pairs[i - 1].delay;
    };
    for (int i = 0; i <= r; ++i) {
      const Extended ci = cost(i);
      const Extended fast = ci.is_infinite()
                                ? Extended::Infinite()
                                : Extended(ci.value() - cost(i + 1).value());
      std::string id = CopyId(job.id, i);
      origin[id] = OriginEntry{job.id, i, i == 0 ? -1 : pairs[i - 1].alternative_index};
      copies[v].push_back(id);
      jobs.push_back(NormalizedJob{std::move(id), delay(i + 1), fast});
    }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, w] : instance.dag().edges()) {
    for (const std::string& a : copies[u]) {
      for (const std::string& b : copies[w]) edges.emplace_back(a, b);
    }
  }
  return NormalizedInstance::Create(std::move(jobs), edges,
                                    instance.deadline(), std::move(origin));
}

std::vector<std::pair<std::string, int>> DenormalizeSolution(
    const NormalizedInstance& norm, const AccelerationSet& sol) {
  if (!norm.origin_map()) {
    ThrowInvalid("normalized instance carries no origin map");
  }
  const auto& origin = *norm.origin_map();
  std::vector<char> is_fast(norm.num_jobs(), 0);
  for (int v : sol.fast) {
    if (v < 0 || v >= norm.num_jobs()) ThrowInvalid("job index out of range");
    is_fast[v] = 1;
  }

  struct Copies {
    int r = -1;
    int highest_slow = 0;
    std::map<int, int> alternative_of_copy;
  };
  std::map<std::string, Copies> per_job;
  for (int v = 0; v < norm.num_jobs(); ++v) {
    const OriginEntry& entry = origin[v];
    Copies& c = per_job[entry.original_job];
    c.r = std::max(c.r, entry.copy_index);
    c.alternative_of_copy[entry.copy_index] = entry.alternative_index;
    if (is_fast[v]) {
      if (entry.copy_index == 0) {
        ThrowInvalid("solution accelerates '" + norm.id(v) +
                     "', whose fast option has INFINITE cost");
      }
    } else {
      c.highest_slow = std::max(c.highest_slow, entry.copy_index);
    }
  }

  std::vector<std::pair<std::string, int>> choice;
  for (const auto& [job, c] : per_job) {
    const int j = std::min(c.highest_slow + 1, c.r);
    auto it = c.alternative_of_copy.find(j);
    if (it == c.alternative_of_copy.end() || it->second < 0) {
      ThrowInvalid("origin map of '" + job + "' is incomplete");
    }
    choice.emplace_back(job, it->second);
  }
  return choice;
}

std::vector<int> ChoiceVector(
    const TctInstance& original,
    const std::vector<std::pair<std::string, int>>& choice) {
  std::vector<int> out(original.num_jobs(), -1);
  for (const auto& [id, alt] : choice) out[original.IndexOf(id)] = alt;
  for (int v = 0; v < original.num_jobs(); ++v) {
    if (out[v] < 0) ThrowInvalid("no choice for job '" + original.id(v) + "'");
  }
  return out;
}

}  // namespace tct

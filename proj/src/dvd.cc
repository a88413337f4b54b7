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

#include "tct/dvd.h"

#include <algorithm>
#include <functional>
#include <set>

#include "tct/error.h"

namespace tct {

DvdInstance::DvdInstance(std::vector<std::string> vertices,
                         std::vector<std::pair<int, int>> edges, int k)
    : vertices_(std::move(vertices)), k_(k) {
  if (k < 1) ThrowInvalid("k must be at least 1");
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) ThrowInvalid("duplicate vertex name");
  dag_ = Dag(num_vertices(), std::move(edges));
}

DvdInstance DvdInstance::WithK(int k) const {
  return DvdInstance(vertices_, dag_.edges(), k);
}

std::vector<std::vector<int>> KVertexPaths(const Dag& dag, int k,
                                           std::span<const char> removed,
                                           std::int64_t max_paths) {
  const int n = dag.num_nodes();
  auto alive = [&](int v) { return removed.empty() || !removed[v]; };
  // reach[v]: vertices on a longest surviving path starting at v.
  std::vector<int> reach(n, 0);
  const auto& topo = dag.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    if (!alive(v)) continue;
    int best = 0;
    for (int w : dag.successors(v)) best = std::max(best, reach[w]);
    reach[v] = best + 1;
  }

  std::vector<std::vector<int>> paths;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int v) {
    current.push_back(v);
    if (static_cast<int>(current.size()) == k) {
      if (static_cast<std::int64_t>(paths.size()) >= max_paths) {
        throw TctError(ErrorKind::kResourceCap, "too many k-vertex paths");
      }
      paths.push_back(current);
    } else {
      const int need = k - static_cast<int>(current.size());
      for (int w : dag.successors(v)) {
        if (alive(w) && reach[w] >= need) extend(w);
      }
    }
    current.pop_back();
  };
  for (int v = 0; v < n; ++v) {
    if (alive(v) && reach[v] >= k) extend(v);
  }
  return paths;
}

bool DestroysAllKPaths(const DvdInstance& dvd, std::span<const int> deleted) {
  std::vector<int> longest(dvd.num_vertices(), 0);
  std::vector<char> gone(dvd.num_vertices(), 0);
  for (int v : deleted) gone.at(v) = 1;
  for (int v : dvd.dag().topological_order()) {
    if (gone[v]) continue;
    longest[v] = std::max(longest[v], 1);
    if (longest[v] >= dvd.k()) return false;
    for (int w : dvd.dag().successors(v)) {
      longest[w] = std::max(longest[w], longest[v] + 1);
    }
  }
  return true;
}

}  // namespace tct

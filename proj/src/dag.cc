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

#include "tct/dag.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "tct/error.h"

namespace tct {

Dag::Dag(int num_nodes, std::vector<std::pair<int, int>> edges)
    : num_nodes_(num_nodes) {
  if (num_nodes < 0) ThrowInvalid("negative node count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      ThrowInvalid("edge endpoint out of range");
    }
    if (u == v) ThrowInvalid("self-loop on node " + std::to_string(u));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  successors_.assign(num_nodes, {});
  predecessors_.assign(num_nodes, {});
  std::vector<int> indegree(num_nodes, 0);
  for (const auto& [u, v] : edges_) {
    successors_[u].push_back(v);
    predecessors_[v].push_back(u);
    ++indegree[v];
  }
  for (auto& p : predecessors_) std::sort(p.begin(), p.end());

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < num_nodes; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  topo_.reserve(num_nodes);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : successors_[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(topo_.size()) != num_nodes) {
    ThrowInvalid("precedence relation contains a cycle");
  }

  level_.assign(num_nodes, 1);
  for (int v : topo_) {
    for (int w : successors_[v]) level_[w] = std::max(level_[w], level_[v] + 1);
  }
  depth_ = num_nodes == 0 ? 0 : *std::max_element(level_.begin(), level_.end());

  const std::size_t words = (static_cast<std::size_t>(num_nodes) + 63) / 64;
  reach_.assign(num_nodes, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const int v = *it;
    for (int w : successors_[v]) {
      reach_[v][static_cast<std::size_t>(w) >> 6] |= std::uint64_t{1} << (w & 63);
      for (std::size_t i = 0; i < words; ++i) reach_[v][i] |= reach_[w][i];
    }
  }
}

std::vector<int> Dag::ClosureSuccessors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < num_nodes_; ++w) {
    if (Reaches(v, w)) out.push_back(w);
  }
  return out;
}

}  // namespace tct

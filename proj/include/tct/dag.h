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

#ifndef TCT_DAG_H_
#define TCT_DAG_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tct {

// Immutable acyclic digraph on nodes 0..n-1. Construction rejects cycles,
// self-loops and out-of-range endpoints; duplicate edges are merged.
//
// The strict reachability relation (the transitive closure, i.e. the
// precedence order generated by the edges) is answered from per-node
// bitsets computed once at construction.
class Dag {
 public:
  Dag() = default;
  Dag(int num_nodes, std::vector<std::pair<int, int>> edges);

  int num_nodes() const { return num_nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> successors(int v) const { return successors_[v]; }
  std::span<const int> predecessors(int v) const { return predecessors_[v]; }

  // Lexicographically smallest topological order.
  const std::vector<int>& topological_order() const { return topo_; }

  // level[v] = maximum number of nodes on a path ending in v (>= 1).
  const std::vector<int>& longest_path_ending_at() const { return level_; }

  // Maximum number of nodes on any path; 0 for the empty graph.
  int depth() const { return depth_; }

  // True iff there is a path with at least one edge from u to v.
  bool Reaches(int u, int v) const {
    return (reach_[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  // All nodes reachable from v, ascending.
  std::vector<int> ClosureSuccessors(int v) const;

 private:
  int num_nodes_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> successors_;
  std::vector<std::vector<int>> predecessors_;
  std::vector<int> topo_;
  std::vector<int> level_;
  int depth_ = 0;
  std::vector<std::vector<std::uint64_t>> reach_;
};

}  // namespace tct

#endif  // TCT_DAG_H_

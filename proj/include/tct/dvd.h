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

// Vertex deletion to destroy long paths: given an acyclic digraph and k,
// delete as few vertices as possible so that no directed path with k
// vertices survives.

#ifndef TCT_DVD_H_
#define TCT_DVD_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tct/dag.h"

namespace tct {

class DvdInstance {
 public:
  DvdInstance() = default;
  // Rejects cycles, k < 1 and duplicate vertex names.
  DvdInstance(std::vector<std::string> vertices,
              std::vector<std::pair<int, int>> edges, int k);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return dag_.edges(); }
  const Dag& dag() const { return dag_; }
  int k() const { return k_; }
  int depth() const { return dag_.depth(); }

  DvdInstance WithK(int k) const;

 private:
  std::vector<std::string> vertices_;
  Dag dag_;
  int k_ = 1;
};

// All directed paths with exactly `k` vertices avoiding `removed` (may be
// empty), in lexicographic order. Throws TctError(kResourceCap) beyond
// `max_paths`.
std::vector<std::vector<int>> KVertexPaths(const Dag& dag, int k,
                                           std::span<const char> removed = {},
                                           std::int64_t max_paths = 5'000'000);

// True iff deleting `deleted` destroys every path with k vertices.
bool DestroysAllKPaths(const DvdInstance& dvd, std::span<const int> deleted);

}  // namespace tct

#endif  // TCT_DVD_H_

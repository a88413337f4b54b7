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

#ifndef TCT_ASSIGNMENT_H_
#define TCT_ASSIGNMENT_H_

#include <vector>

#include "tct/rational.h"

namespace tct {

// Minimum-cost perfect assignment of rows to columns in a square matrix, by
// successive shortest augmenting paths with potentials, O(m^3) exact
// rational operations. Returns column[row]. Ties resolve to the smallest
// column index in each Dijkstra step, so the result is deterministic.
std::vector<int> SolveAssignment(const std::vector<std::vector<Rational>>& cost);

}  // namespace tct

#endif  // TCT_ASSIGNMENT_H_

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

#include "tct/assignment.h"

#include <optional>

#include "tct/error.h"

namespace tct {

std::vector<int> SolveAssignment(const std::vector<std::vector<Rational>>& cost) {
  const int m = static_cast<int>(cost.size());
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != m) ThrowInvalid("cost matrix must be square");
  }
  // 1-based arrays; column 0 is the virtual start.
  std::vector<Rational> u(m + 1, Rational(0));
  std::vector<Rational> v(m + 1, Rational(0));
  std::vector<int> row_of(m + 1, 0);
  std::vector<int> way(m + 1, 0);
  for (int r = 1; r <= m; ++r) {
    row_of[0] = r;
    int col = 0;
    std::vector<std::optional<Rational>> min_slack(m + 1);
    std::vector<char> used(m + 1, 0);
    do {
      used[col] = 1;
      const int row = row_of[col];
      std::optional<Rational> delta;
      int next = -1;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Rational slack = cost[row - 1][j - 1] - u[row] - v[j];
        if (!min_slack[j] || slack < *min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col;
        }
        if (!delta || *min_slack[j] < *delta) {
          delta = *min_slack[j];
          next = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of[j]] += *delta;
          v[j] -= *delta;
        } else {
          *min_slack[j] -= *delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const int prev = way[col];
      row_of[col] = row_of[prev];
      col = prev;
    } while (col != 0);
  }
  std::vector<int> column(m, -1);
  for (int j = 1; j <= m; ++j) column[row_of[j] - 1] = j - 1;
  return column;
}

}  // namespace tct

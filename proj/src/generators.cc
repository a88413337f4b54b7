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

#include "tct/generators.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "tct/error.h"

namespace tct {
namespace {

std::string PairId(const std::string& name, int i) {
  return "(" + name + "," + std::to_string(i) + ")";
}

DvdInstance NumberedDvd(int n, std::vector<std::pair<int, int>> edges, int k) {
  if (n < 1) ThrowInvalid("n must be at least 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return DvdInstance(std::move(names), std::move(edges), k);
}

}  // namespace

std::string GapJobId(int i, int j) { return PairId(std::to_string(i), j); }

GapInstance GenGapInstance(int d, int k) {
  if (d < 2 || k < 1) ThrowInvalid("gap family needs d >= 2 and k >= 1");
  const Rational deadline = Frac(d * k, 2);
  std::vector<NormalizedJob> jobs;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= d; ++i) {
    for (int j = 0; j <= k; ++j) {
      jobs.push_back(NormalizedJob{GapJobId(i, j), Extended(j), Extended(1)});
      if (i == d) continue;
      for (int j2 = 0; j2 <= k; ++j2) edges.emplace_back(GapJobId(i, j), GapJobId(i + 1, j2));
    }
  }
  GapInstance gap;
  gap.norm = NormalizedInstance::Create(std::move(jobs), edges, deadline);
  gap.cover.x.resize(gap.norm.num_jobs());
  for (int v = 0; v < gap.norm.num_jobs(); ++v) {
    gap.cover.x[v] = gap.norm.slow_delay(v).value() / deadline;
  }
  gap.cover.objective = CoverObjective(gap.norm, gap.cover.x);
  gap.cover.quality = CoverQuality::kExact;
  return gap;
}

NormalizedInstance DvdToTct(const DvdInstance& dvd) {
  const int d = dvd.depth();
  if (d == 0) ThrowInvalid("DVD instance has no vertices");
  const std::vector<int>& level = dvd.dag().longest_path_ending_at();
  const Rational deadline(d * d + dvd.k() - 1);
  std::vector<NormalizedJob> jobs;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < dvd.num_vertices(); ++v) {
    const std::string& name = dvd.vertices()[v];
    for (int i = 1; i <= d; ++i) {
      if (i == level[v]) {
        jobs.push_back(NormalizedJob{PairId(name, i), Extended(d + 1), Extended(1)});
      } else {
        jobs.push_back(NormalizedJob{PairId(name, i), Extended(d), Extended::Infinite()});
      }
      if (i < d) edges.emplace_back(PairId(name, i), PairId(name, i + 1));
    }
  }
  // Cross edges stop at w's variable level, so a chain through w cannot
  // skip its variable job.
  for (const auto& [v, w] : dvd.edges()) {
    for (int i = level[v]; i < level[w]; ++i) {
      edges.emplace_back(PairId(dvd.vertices()[v], i), PairId(dvd.vertices()[w], i + 1));
    }
  }
  return NormalizedInstance::Create(std::move(jobs), edges, deadline);
}

DvdInstance TensorWithTournament(const DvdInstance& dvd, int d) {
  if (d < 1) ThrowInvalid("tensor factor d must be at least 1");
  std::vector<std::string> names;
  for (const std::string& name : dvd.vertices()) {
    for (int i = 1; i <= d; ++i) names.push_back(PairId(name, i));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [v, w] : dvd.edges()) {
    for (int i = 1; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        edges.emplace_back(v * d + (i - 1), w * d + (j - 1));
      }
    }
  }
  return DvdInstance(std::move(names), std::move(edges), dvd.k());
}

DvdInstance GenTournament(int n, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return NumberedDvd(n, std::move(edges), k);
}

DvdInstance GenPath(int n, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return NumberedDvd(n, std::move(edges), k);
}

DvdInstance GenRandomDag(int n, double p, int k, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.UniformUnit() < p) edges.emplace_back(i, j);
    }
  }
  return NumberedDvd(n, std::move(edges), k);
}

std::vector<std::vector<TensorVertex>> PathPackingCertificate(int r, int d, int k) {
  if (r < 1 || k < 2 || k > d) ThrowInvalid("packing needs r >= 1 and 2 <= k <= d");
  std::vector<std::vector<TensorVertex>> paths;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= d; ++j) {
      std::vector<TensorVertex> path;
      for (int m = 0; m < k; ++m) {
        int s = k * i + m;
        int t = j + m;
        if (t > d) {
          s -= k;
          t -= d;
        }
        path.emplace_back(s, t);
      }
      std::sort(path.begin(), path.end());
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

bool VerifyPathPacking(const std::vector<std::vector<TensorVertex>>& paths,
                       int n, int d, int k) {
  std::set<TensorVertex> used;
  for (const auto& path : paths) {
    if (static_cast<int>(path.size()) != k) return false;
    for (std::size_t m = 0; m < path.size(); ++m) {
      const auto [s, t] = path[m];
      if (s < 1 || s > n || t < 1 || t > d) return false;
      if (!used.insert(path[m]).second) return false;
      if (m > 0) {
        const auto [ps, pt] = path[m - 1];
        if (s != ps + 1 || t <= pt) return false;
      }
    }
  }
  return true;
}

int TensorIndex(const DvdInstance& tensor, int s, int i) {
  const std::string name = PairId(std::to_string(s), i);
  const auto& names = tensor.vertices();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) ThrowInvalid("no vertex " + name);
  return static_cast<int>(it - names.begin());
}

DvdGreedyResult DvdGreedy(const DvdInstance& dvd) {
  const Dag& dag = dvd.dag();
  const int n = dvd.num_vertices();
  const int k = dvd.k();
  std::vector<char> removed(n, 0);
  DvdGreedyResult result;
  while (true) {
    // reach[v]: vertices on a longest surviving path starting at v.
    std::vector<int> reach(n, 0);
    const auto& topo = dag.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int v = *it;
      if (removed[v]) continue;
      int best = 0;
      for (int w : dag.successors(v)) best = std::max(best, reach[w]);
      reach[v] = best + 1;
    }
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (!removed[u] && reach[u] >= k) {
        v = u;
        break;
      }
    }
    if (v < 0) break;
    std::vector<int> path = {v};
    while (static_cast<int>(path.size()) < k) {
      const int need = k - static_cast<int>(path.size());
      int next = -1;
      for (int w : dag.successors(path.back())) {
        if (!removed[w] && reach[w] >= need && (next < 0 || w < next)) next = w;
      }
      path.push_back(next);
    }
    for (int u : path) {
      removed[u] = 1;
      result.vertices.push_back(u);
    }
    result.paths.push_back(std::move(path));
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

NormalizedInstance GenRandomLayered(const RandomLayeredParams& params) {
  const int d = params.depth;
  const int n = params.num_jobs;
  if (d < 1 || n < d) ThrowInvalid("random instances need 1 <= d <= n");
  if (params.cost_min < 0 || params.cost_max < params.cost_min ||
      params.delay_min < 0 || params.delay_max < params.delay_min) {
    ThrowInvalid("invalid cost or delay range");
  }
  if (params.slack_factor <= 0) ThrowInvalid("slack factor must be positive");
  Rng rng(params.seed);
  std::vector<int> layer(n);
  for (int v = 0; v < n; ++v) {
    layer[v] = v < d ? v + 1 : static_cast<int>(rng.UniformInt(1, d));
  }
  std::vector<Rational> delay(n);
  std::vector<Rational> cost(n);
  for (int v = 0; v < n; ++v) {
    delay[v] = Rational(rng.UniformInt(params.delay_min, params.delay_max));
    cost[v] = Rational(rng.UniformInt(params.cost_min, params.cost_max));
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < d; ++v) edges.emplace_back(v, v + 1);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (layer[v] >= layer[w]) continue;
      if (v < d && w < d) continue;  // spine edges are fixed
      if (rng.UniformUnit() < params.edge_probability) edges.emplace_back(v, w);
    }
  }
  // Longest chain of slow delays; edges go from lower to higher layers.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return layer[a] < layer[b]; });
  std::vector<std::vector<int>> preds(n);
  for (const auto& [v, w] : edges) preds[w].push_back(v);
  std::vector<Rational> longest(n);
  Rational longest_chain = 0;
  for (int v : order) {
    Rational best = 0;
    for (int u : preds[v]) best = std::max(best, longest[u]);
    longest[v] = best + delay[v];
    longest_chain = std::max(longest_chain, longest[v]);
  }
  Rational deadline = params.slack_factor * longest_chain;
  if (deadline <= 0) deadline = 1;

  auto id = [](int v) {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "j%03d", v);
    return std::string(buffer);
  };
  std::vector<NormalizedJob> jobs;
  for (int v = 0; v < n; ++v) {
    jobs.push_back(NormalizedJob{id(v), Extended(delay[v]), Extended(cost[v])});
  }
  std::vector<std::pair<std::string, std::string>> id_edges;
  for (const auto& [v, w] : edges) id_edges.emplace_back(id(v), id(w));
  return NormalizedInstance::Create(std::move(jobs), id_edges, deadline);
}

}  // namespace tct

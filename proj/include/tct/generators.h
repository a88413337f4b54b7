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

// Instance families and reductions between path deletion and time-cost
// tradeoff instances.

#ifndef TCT_GENERATORS_H_
#define TCT_GENERATORS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tct/dvd.h"
#include "tct/model.h"
#include "tct/random.h"

namespace tct {

struct GapInstance {
  NormalizedInstance norm;
  FractionalCover cover;  // x_(i,j) = j/T, objective k+1
};

// Jobs "(i,j)" for i = 1..d, j = 0..k; (i,j) precedes (i',j') iff i < i'.
// Job (i,j) runs in time j for free or in time 0 at cost 1; T = dk/2. The
// integral optimum is dk/2 while the fractional one is at most k+1.
GapInstance GenGapInstance(int d, int k);

// Job ids of the gap family.
std::string GapJobId(int i, int j);

// Normalized instance with the same depth and optimum as the DVD(k)
// instance. With d = depth(G) and l the canonical levels, jobs are (v,i)
// for i = 1..d; (v,l(v)) takes time d+1 for free or 0 at cost 1, every other
// job takes time d and cannot be accelerated. (v,i) precedes (v,i+1), and
// (v,i) precedes (w,i+1) for every edge (v,w) with l(v) <= i < l(w). The
// deadline is d^2 + k - 1. Ids are "(name,i)".
NormalizedInstance DvdToTct(const DvdInstance& dvd);

// Vertices "(name,i)" for i = 1..d, edges ((v,i),(w,j)) for (v,w) in E and
// i < j. Keeps k.
DvdInstance TensorWithTournament(const DvdInstance& dvd, int d);

// Acyclic tournament on "1".."n" (edges i -> j for i < j) and directed path
// (edges i -> i+1).
DvdInstance GenTournament(int n, int k);
DvdInstance GenPath(int n, int k);

// Random acyclic digraph on "1".."n": each pair i < j is an edge with
// probability p.
DvdInstance GenRandomDag(int n, double p, int k, Rng& rng);

// A vertex (s, i) of P_n^d, both 1-based.
using TensorVertex = std::pair<int, int>;

// r d vertex-disjoint paths with k vertices in P_n^d, n = (r+1)k - 1. Path
// (i, j) starts from {(ki + m, j + m) : m = 0..k-1} and moves every vertex
// (s, d + t) to (s - k, t). Each path is listed in path order. Requires
// r >= 1 and 2 <= k <= d.
std::vector<std::vector<TensorVertex>> PathPackingCertificate(int r, int d, int k);

// True iff the paths are pairwise vertex-disjoint directed paths of P_n^d,
// each with exactly k vertices.
bool VerifyPathPacking(const std::vector<std::vector<TensorVertex>>& paths,
                       int n, int d, int k);

// Index of vertex (s, i) in TensorWithTournament(GenPath(n, k), d).
int TensorIndex(const DvdInstance& tensor, int s, int i);

struct DvdGreedyResult {
  std::vector<int> vertices;             // ascending
  std::vector<std::vector<int>> paths;   // disjoint k-vertex paths, in order
};

// Repeatedly removes the lexicographically least k-vertex path among the
// remaining vertices. Returns all removed vertices: they hit every k-vertex
// path and number at most k OPT.
DvdGreedyResult DvdGreedy(const DvdInstance& dvd);

struct RandomLayeredParams {
  int depth = 4;
  int num_jobs = 20;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 10;
  std::int64_t delay_min = 1;
  std::int64_t delay_max = 10;
  // Deadline = slack_factor * (longest chain of slow delays).
  Rational slack_factor = Rational(1, 2);
  // Probability of an edge between jobs on different layers.
  double edge_probability = 0.3;
};

// Random normalized instance of exact depth params.depth: a spine chain of
// one job per layer, the other jobs on uniformly random layers, and edges
// only from lower to higher layers. Ids "j000", "j001", ... Integer delays
// and costs. Deterministic in the seed.
NormalizedInstance GenRandomLayered(const RandomLayeredParams& params);

}  // namespace tct

#endif  // TCT_GENERATORS_H_

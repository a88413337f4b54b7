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

// Data model for deadline time-cost tradeoff instances and their solutions.
//
// A TctInstance is a set of jobs with a precedence DAG, a deadline and per
// job a nonempty set of (delay, cost) alternatives. A NormalizedInstance
// restricts every job to exactly {(0, c), (t, 0)}: pay c to run instantly or
// run slowly for free. Feasible solutions of a normalized instance are sets
// of accelerated jobs such that every chain's remaining slow delay fits into
// the deadline.
//
// Jobs are identified by opaque strings. Instances store jobs sorted by id,
// so job indices follow lexicographic id order and every iteration over jobs
// is deterministic.

#ifndef TCT_MODEL_H_
#define TCT_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tct/dag.h"
#include "tct/rational.h"

namespace tct {

struct Alternative {
  Extended delay;
  Extended cost;

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct Job {
  std::string id;
  std::vector<Alternative> alternatives;
};

class TctInstance {
 public:
  TctInstance() = default;
  // Validates ids (unique), alternatives (nonempty), deadline (> 0) and
  // acyclicity. Edges are given as (predecessor id, successor id).
  TctInstance(std::vector<Job> jobs,
              const std::vector<std::pair<std::string, std::string>>& edges,
              Rational deadline);

  int num_jobs() const { return static_cast<int>(jobs_.size()); }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Job& job(int v) const { return jobs_[v]; }
  const std::string& id(int v) const { return jobs_[v].id; }
  const Rational& deadline() const { return deadline_; }
  const Dag& dag() const { return dag_; }

  // Throws TctError if the id is unknown.
  int IndexOf(std::string_view id) const;
  std::optional<int> FindIndex(std::string_view id) const;

  std::vector<std::pair<std::string, std::string>> EdgeIds() const;

 private:
  std::vector<Job> jobs_;
  Rational deadline_ = 1;
  Dag dag_;
  std::unordered_map<std::string, int> index_;
};

// Where a normalized job came from: copy `copy_index` of `original_job`.
// `alternative_index` is the index (in the original job's alternative list)
// of the time/cost pair that copy represents, or -1 for copy 0.
struct OriginEntry {
  std::string original_job;
  int copy_index = 0;
  int alternative_index = -1;

  friend bool operator==(const OriginEntry&, const OriginEntry&) = default;
};

struct NormalizedJob {
  std::string id;
  Extended slow_delay;
  Extended fast_cost;
};

class NormalizedInstance {
 public:
  NormalizedInstance() = default;
  // `base` must have exactly two alternatives per job, one with delay 0 and
  // one with cost 0. `origin`, when present, is indexed by job id.
  explicit NormalizedInstance(
      TctInstance base,
      std::optional<std::unordered_map<std::string, OriginEntry>> origin = {});

  static NormalizedInstance Create(
      std::vector<NormalizedJob> jobs,
      const std::vector<std::pair<std::string, std::string>>& edges,
      Rational deadline,
      std::optional<std::unordered_map<std::string, OriginEntry>> origin = {});

  const TctInstance& base() const { return base_; }
  int num_jobs() const { return base_.num_jobs(); }
  const std::string& id(int v) const { return base_.id(v); }
  const Rational& deadline() const { return base_.deadline(); }
  const Dag& dag() const { return base_.dag(); }

  const Extended& slow_delay(int v) const { return slow_delay_[v]; }
  const Extended& fast_cost(int v) const { return fast_cost_[v]; }
  const std::vector<Extended>& slow_delays() const { return slow_delay_; }
  const std::vector<Extended>& fast_costs() const { return fast_cost_; }

  // Indexed by job index when present.
  const std::optional<std::vector<OriginEntry>>& origin_map() const {
    return origin_;
  }

 private:
  TctInstance base_;
  std::vector<Extended> slow_delay_;
  std::vector<Extended> fast_cost_;
  std::optional<std::vector<OriginEntry>> origin_;
};

// The canonical d-partition: level(v) is the maximum number of jobs on a
// chain ending in v, and layer i holds the jobs of level i.
class LayeredView {
 public:
  LayeredView() = default;
  LayeredView(std::vector<int> level, int depth);

  int depth() const { return depth_; }
  int num_jobs() const { return static_cast<int>(level_.size()); }
  // 1-based.
  int level(int v) const { return level_[v]; }
  const std::vector<int>& levels() const { return level_; }
  // 1-based; members ascending.
  const std::vector<int>& layer(int i) const { return layers_[i - 1]; }

 private:
  std::vector<int> level_;
  std::vector<std::vector<int>> layers_;
  int depth_ = 0;
};

// Integral solution: the accelerated jobs (ascending indices) and their
// total fast cost.
struct AccelerationSet {
  std::vector<int> fast;
  Extended cost;
};

enum class CoverQuality { kExact, kApprox };

// Fractional vertex cover x in [0,1]^V with its objective sum c_v x_v.
// Jobs whose fast cost is INFINITE always carry x_v = 0.
struct FractionalCover {
  std::vector<Rational> x;
  Rational objective;
  CoverQuality quality = CoverQuality::kExact;
  Rational epsilon = 0;  // meaningful for kApprox
};

// Objective of x under the instance's fast costs (INFINITE-cost jobs must
// have x_v = 0).
Rational CoverObjective(const NormalizedInstance& norm,
                        const std::vector<Rational>& x);

}  // namespace tct

#endif  // TCT_MODEL_H_

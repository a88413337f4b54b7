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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "bench.h"
#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/json_io.h"
#include "tct/lp_engine.h"
#include "tct/normalize.h"
#include "tct/rounding.h"
#include "tct/solver.h"
#include "tct/thresholds.h"

namespace tct {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later checks still run.
class Checker {
 public:
  void Expect(bool condition, const std::string& message) {
    ++checks_;
    if (!condition && pass_) {
      pass_ = false;
      first_failure_ = message;
    }
    if (!condition) ++failures_;
  }
  Outcome Done(const std::string& summary) const {
    Outcome out;
    out.pass = pass_;
    out.detail = summary + "; " + std::to_string(checks_) + " checks";
    if (!pass_) {
      out.detail += ", " + std::to_string(failures_) + " failed, first: " + first_failure_;
    }
    return out;
  }

 private:
  bool pass_ = true;
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

NormalizedInstance RandomInstance(int depth, int num_jobs, std::uint64_t seed) {
  RandomLayeredParams params;
  params.depth = depth;
  params.num_jobs = num_jobs;
  params.seed = seed;
  return GenRandomLayered(params);
}

std::string Str(const Rational& q) { return q.get_str(); }
std::string Str(const Extended& e) { return ToString(e); }

// 1. Integrality gap family, d = 3.
Outcome GapCurve() {
  Checker check;
  Rational previous = 0;
  std::string curve;
  for (int k : {2, 4, 6, 8}) {
    const GapInstance gap = GenGapInstance(3, k);
    const AccelerationSet opt = ExactTctOpt(gap.norm, BlockerLimits{27, 4, 50'000'000});
    const Rational half_dk = Frac(3 * k, 2);
    check.Expect(opt.cost == Extended(half_dk),
                 "k=" + std::to_string(k) + " OPT " + Str(opt.cost));
    check.Expect(CheckFeasible(gap.norm, opt).feasible, "OPT infeasible");
    check.Expect(gap.cover.objective == k + 1, "cover objective");
    const Rational ratio = opt.cost.value() / (k + 1);
    check.Expect(ratio == half_dk / (k + 1), "ratio");
    check.Expect(ratio > previous && ratio < Frac(3, 2), "monotone toward 3/2");
    previous = ratio;
    curve += " " + Str(ratio);
  }
  return check.Done("ratios" + curve);
}

// 2. Deterministic d/2 rounding on 200 instances.
Outcome DeterministicBound() {
  Checker check;
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const int d = 3 + i % 3;
    const int n = d + 2 + (i * 7) % (41 - d - 2);
    const NormalizedInstance norm = RandomInstance(d, n, 20000 + i);
    const LayeredView layered = Layer(norm);
    const LpResult lp = SolveLp(norm, layered);
    const AccelerationSet sol = RoundDeterministic(norm, layered, lp.cover.x);
    const std::string tag = "instance " + std::to_string(i);
    check.Expect(CheckFeasible(norm, sol).feasible, tag + " infeasible");
    check.Expect(sol.cost <= Extended(Frac(d, 2) * lp.cover.objective), tag + " above d/2 LP");
    if (n <= 22) {
      check.Expect(sol.cost >= ExactTctOpt(norm).cost, tag + " below OPT");
      ++compared;
    }
  }
  return check.Done("200 instances, " + std::to_string(compared) + " compared with OPT");
}

// 3. Marginal law of randomized rounding and the threshold law.
Outcome MarginalLaw() {
  Checker check;
  const int trials = 100000;
  int jobs_checked = 0;
  int fractional = 0;
  double worst_z = 0;
  Rng rng(3003);
  // The LP optimum is mostly integral, so every instance also gets a random
  // vector on the 1/40 grid; the law holds for any x in [0,1].
  for (int i = 0; i < 20; ++i) {
    const NormalizedInstance norm = RandomInstance(4, 10 + i % 8, 30000 + i);
    const LayeredView layered = Layer(norm);
    const int d = layered.depth();
    std::vector<Rational> grid(norm.num_jobs());
    for (Rational& value : grid) value = Frac(static_cast<long>(rng.UniformInt(0, 40)), 40);
    for (const std::vector<Rational>& x : {ExactLpOpt(norm).x, grid}) {
      std::vector<int> hits(norm.num_jobs(), 0);
      for (int t = 0; t < trials; ++t) {
        for (int v : RoundRandomized(norm, layered, x, rng).fast) ++hits[v];
      }
      for (int v = 0; v < norm.num_jobs(); ++v) {
        const double p = std::min(1.0, d / 2.0 * x[v].get_d());
        const double sigma = std::sqrt(p * (1 - p) / trials);
        const double diff = std::abs(static_cast<double>(hits[v]) / trials - p);
        if (sigma > 0) {
          worst_z = std::max(worst_z, diff / sigma);
          ++fractional;
        }
        check.Expect(diff <= 3 * sigma + 1e-12,
                     "instance " + std::to_string(i) + " job " + std::to_string(v) + " off by " +
                         std::to_string(diff / std::max(sigma, 1e-300)) + " sigma");
        ++jobs_checked;
      }
    }
  }
  // Threshold law: 20-bin chi-squared per position, sums exactly 1.
  const int samples = 100000;
  const int bins = 20;
  const double critical =
      boost::math::quantile(boost::math::complement(boost::math::chi_squared(bins - 1), 1e-3));
  double worst_chi = 0;
  for (int d : {4, 5}) {
    std::vector<std::vector<int>> counts(d, std::vector<int>(bins, 0));
    Rng threshold_rng(4000 + d);
    for (int s = 0; s < samples; ++s) {
      const PositionThresholds t = SampleThresholds(d, threshold_rng);
      Rational sum = 0;
      for (int p = 1; p <= d; ++p) {
        sum += t.a[p - 1];
        const Rational u = (t.a[p - 1] - IntervalLow(p, d)) / (IntervalHigh(p, d) - IntervalLow(p, d));
        counts[p - 1][std::min(bins - 1, static_cast<int>(u.get_d() * bins))]++;
      }
      if (sum != 1) check.Expect(std::abs(Rational(sum - 1).get_d()) <= std::ldexp(1.0, -40), "sum");
    }
    for (int p = 0; p < d; ++p) {
      double chi = 0;
      const double expected = static_cast<double>(samples) / bins;
      for (int c : counts[p]) chi += (c - expected) * (c - expected) / expected;
      worst_chi = std::max(worst_chi, chi);
      check.Expect(chi <= critical, "d=" + std::to_string(d) + " position " +
                                        std::to_string(p + 1) + " chi2 " + std::to_string(chi));
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d job marginals (%d fractional), max |z| %.2f; chi2 max %.1f vs critical %.1f",
                jobs_checked, fractional, worst_z, worst_chi, critical);
  return check.Done(buf);
}

// 4. Slack-improved deterministic rounding on 100 instances.
Outcome SlackDeterministic() {
  Checker check;
  int strictly_better = 0;
  for (int i = 0; i < 100; ++i) {
    const int d = 4 + i % 2;
    const int n = d + 2 + (i * 11) % (41 - d - 2);
    const NormalizedInstance norm = RandomInstance(d, n, 40000 + i);
    const LayeredView layered = Layer(norm);
    const LpResult lp = SolveLp(norm, layered);
    const AccelerationSet sol = RoundSlackDeterministic(norm, layered, lp.cover.x);
    const std::string tag = "instance " + std::to_string(i);
    check.Expect(CheckFeasible(norm, sol).feasible, tag + " infeasible");
    const Rational bound = (Frac(d, 2) - Frac(d, 128 * n)) * lp.cover.objective;
    check.Expect(sol.cost <= Extended(bound), tag + " above bound");
    if (sol.cost < Extended(Frac(d, 2) * lp.cover.objective)) ++strictly_better;
  }
  check.Expect(strictly_better > 0, "never strictly below d/2 LP");
  return check.Done(std::to_string(strictly_better) + "/100 strictly below (d/2) LP");
}

// 5. Approximate LP against the exact LP.
Outcome ApproxLp() {
  Checker check;
  Rational worst = 0;
  for (int i = 0; i < 50; ++i) {
    const int d = 2 + i % 3;
    const int n = d + 3 + i % (26 - d - 3);
    const NormalizedInstance norm = RandomInstance(d, n, 50000 + i);
    const LayeredView layered = Layer(norm);
    LpOptions options;
    options.epsilon = Frac(1, 20);
    const LpResult approx = SolveLp(norm, layered, options);
    const FractionalCover exact = ExactLpOpt(norm);
    const std::string tag = "instance " + std::to_string(i);
    check.Expect(approx.cover.objective <= Frac(105, 100) * exact.objective, tag + " objective");
    if (exact.objective > 0) worst = std::max<Rational>(worst, approx.cover.objective / exact.objective);
    const auto blocker = EnumerateBlocker(norm);
    check.Expect(MinCoverage(approx.cover.x, blocker).min_coverage >= 1, tag + " uncovered cut");
  }
  return check.Done("max approx/exact " + std::to_string(worst.get_d()));
}

// Random DAGs on at most six vertices with depth in [2, 4].
std::vector<DvdInstance> SmallDags(int count, std::uint64_t seed) {
  std::vector<DvdInstance> out;
  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng.UniformInt(0, 4));
    DvdInstance g = GenRandomDag(n, 0.5, 2, rng);
    if (g.depth() >= 2 && g.depth() <= 4) out.push_back(std::move(g));
  }
  return out;
}

// 6. Path deletion and the time-cost reduction have the same optimum.
Outcome ReductionEquivalence() {
  Checker check;
  int cases = 0;
  const auto dags = SmallDags(30, 6006);
  for (std::size_t g = 0; g < dags.size(); ++g) {
    for (int k = 2; k <= dags[g].depth(); ++k) {
      const DvdInstance gk = dags[g].WithK(k);
      const auto tct = ExactTctOpt(DvdToTct(gk)).cost;
      const auto dvd = ExactDvdOpt(gk).size();
      check.Expect(tct == Extended(static_cast<long>(dvd)),
                   "dag " + std::to_string(g) + " k=" + std::to_string(k));
      ++cases;
    }
  }
  return check.Done(std::to_string(cases) + " (G,k) pairs");
}

// 7. Tensor sandwich and the packing certificate.
Outcome TensorSandwich() {
  Checker check;
  int cases = 0;
  for (const DvdInstance& g : SmallDags(30, 6006)) {
    for (int d = 2; d <= 4; ++d) {
      for (int k = 2; k <= d; ++k) {
        const DvdInstance gk = g.WithK(k);
        const int base = static_cast<int>(ExactDvdOpt(gk).size());
        const int tensor = static_cast<int>(ExactDvdOpt(TensorWithTournament(gk, d)).size());
        check.Expect((d + 1 - k) * base <= tensor && tensor <= d * base,
                     "sandwich d=" + std::to_string(d) + " k=" + std::to_string(k));
        ++cases;
      }
    }
  }
  const int r = 3, d = 5, k = 3, n = 11;
  const auto paths = PathPackingCertificate(r, d, k);
  check.Expect(paths.size() == 15u && VerifyPathPacking(paths, n, d, k), "packing");
  const DvdInstance tensor = TensorWithTournament(GenPath(n, k), d);
  std::vector<int> cover;
  for (int s = k; s <= n; s += k) {
    for (int t = 1; t <= d; ++t) cover.push_back(TensorIndex(tensor, s, t));
  }
  check.Expect(cover.size() == 15u && DestroysAllKPaths(tensor, cover), "cover");
  return check.Done(std::to_string(cases) + " (G,k,d) cases; OPT(P_11^5,3) = 15 pinned");
}

// 8. Baselines.
Outcome Baselines() {
  Checker check;
  for (int i = 0; i < 60; ++i) {
    const int d = 2 + i % 4;
    const NormalizedInstance norm = RandomInstance(d, d + 3 + i % 14, 80000 + i);
    const FractionalCover lp = ExactLpOpt(norm);
    const AccelerationSet bye = BarYehudaEven(norm);
    const std::string tag = "instance " + std::to_string(i);
    check.Expect(CheckFeasible(norm, bye).feasible, tag + " infeasible");
    check.Expect(bye.cost <= Extended(d * lp.objective), tag + " above d LP");
  }
  Rng rng(8008);
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + i % 3;
    const DvdInstance g = GenRandomDag(3 + i % 10, 0.4, k, rng);
    const DvdGreedyResult greedy = DvdGreedy(g);
    const int opt = static_cast<int>(ExactDvdOpt(g).size());
    check.Expect(DestroysAllKPaths(g, greedy.vertices), "greedy misses a path");
    check.Expect(static_cast<int>(greedy.vertices.size()) <= k * opt, "greedy above k OPT");
  }
  const DvdInstance path = GenPath(9, 3);
  check.Expect(DvdGreedy(path).vertices.size() == 9u, "P9 greedy size");
  check.Expect(ExactDvdOpt(path).size() == 3u, "P9 OPT");
  return check.Done("60 LP instances, 100 DVD instances, P9 k=3 greedy 9 vs OPT 3");
}

// 9. Normalization equivalence and fixed-seed determinism.
Outcome Properties() {
  Checker check;
  Rng rng(9009);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(0, 3));
    std::vector<Job> jobs;
    long total = 0;
    for (int v = 0; v < n; ++v) {
      Job job{"j" + std::to_string(v), {}};
      const int r = 1 + static_cast<int>(rng.UniformInt(0, 2));
      long slowest = 0;
      for (int a = 0; a < r; ++a) {
        const long t = rng.UniformInt(0, 5);
        job.alternatives.push_back({Extended(t), Extended(rng.UniformInt(0, 6))});
        slowest = std::max(slowest, t);
      }
      total += slowest;
      jobs.push_back(std::move(job));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.UniformInt(0, 1)) edges.emplace_back(jobs[i].id, jobs[j].id);
      }
    }
    const TctInstance instance(std::move(jobs), edges, std::max<long>(1, total / 2));
    const GeneralOptimum general = ExactGeneralOpt(instance);
    const NormalizedInstance norm = Normalize(instance);
    if (!general.feasible) continue;
    const AccelerationSet sol = ExactTctOpt(norm);
    check.Expect(sol.cost == general.cost, "normalized optimum differs");
    const auto choice = DenormalizeSolution(norm, sol);
    const ChoiceReport report = EvaluateChoice(instance, ChoiceVector(instance, choice));
    check.Expect(report.feasible && report.cost == general.cost, "denormalized choice");
    ++compared;
  }
  // Fixed-seed reruns.
  for (const std::string name : {"rand", "slack-rand", "det"}) {
    const NormalizedInstance norm = RandomInstance(4, 20, 9100);
    SolveOptions options;
    options.algorithm = *ParseAlgorithm(name);
    options.seed = 77;
    options.trials = 5;
    const SolveReport a = Solve(norm, options);
    const SolveReport b = Solve(norm, options);
    check.Expect(SolutionToJson(norm, a.solution).dump() == SolutionToJson(norm, b.solution).dump(),
                 name + " rerun differs");
  }
  const Json config = Json::parse(R"({"families":[{"family":"gap","d":[3],"k":[2,4]},
      {"family":"random","d":[4],"n":[14],"count":2}],"algorithms":["det","rand","slack-rand"],
      "trials":5})");
  const std::string one = cli::RunBench(config, {11, 1, false}).dump();
  const std::string many = cli::RunBench(config, {11, 4, false}).dump();
  check.Expect(one == many, "bench report depends on thread count");
  return check.Done(std::to_string(compared) + " general instances, reruns byte-identical");
}

}  // namespace
}  // namespace tct

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<tct::Outcome()>>> criteria = {
      {"integrality gap curve", tct::GapCurve},
      {"deterministic d/2 rounding", tct::DeterministicBound},
      {"randomized marginal and threshold laws", tct::MarginalLaw},
      {"slack deterministic rounding", tct::SlackDeterministic},
      {"approximate LP", tct::ApproxLp},
      {"reduction equivalence", tct::ReductionEquivalence},
      {"tensor sandwich and packing", tct::TensorSandwich},
      {"baseline bounds", tct::Baselines},
      {"property suite", tct::Properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    tct::Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("CRITERION %zu %s: %s (%s; %.1fs)\n", i + 1, criteria[i].first.c_str(),
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

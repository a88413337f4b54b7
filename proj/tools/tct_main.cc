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

// tct: command-line front end.
//
// Exit codes: 0 ok, 1 infeasible or failed verification, 2 input error,
// 3 resource cap, 4 internal error.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench.h"
#include "cli_common.h"
#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/json_io.h"
#include "tct/lp_engine.h"
#include "tct/normalize.h"
#include "tct/solver.h"

namespace tct::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::string out = "-";
  std::string format = "json";
};

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) ThrowInvalid("cannot write '" + path + "'");
  out << text;
}

std::string PlainText(const Json& json) {
  if (!json.is_object()) return json.dump() + "\n";
  std::string text;
  for (const auto& [key, value] : json.items()) {
    text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return text;
}

void Emit(const Globals& g, const Json& json) {
  if (g.format == "table") {
    WriteText(g.out, PlainText(json));
  } else {
    WriteJsonFile(g.out, json);
  }
}

std::string ChainText(const NormalizedInstance& norm, const std::vector<int>& chain) {
  std::string text;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) text += " -> ";
    text += norm.id(chain[i]);
  }
  return text;
}

Json IdList(const NormalizedInstance& norm, const std::vector<int>& jobs) {
  Json out = Json::array();
  for (int v : jobs) out.push_back(norm.id(v));
  return out;
}

Json RatioToLp(const Extended& cost, const Rational& lp) {
  if (cost.is_infinite()) return Json(nullptr);
  if (lp == 0) return cost.value() == 0 ? RationalToJson(Rational(1)) : Json(nullptr);
  return RationalToJson(Rational(cost.value() / lp));
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  int d = 3;
  int k = 2;
  int n = 20;
  std::string cover;
  std::int64_t cost_min = 1, cost_max = 10, delay_min = 1, delay_max = 10;
  std::string slack = "1/2";
  double edge_probability = 0.3;
};

void AddGen(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto* gen = app.add_subcommand("gen", "Generate an instance")->require_subcommand(1);
  auto args = std::make_shared<GenArgs>();

  auto* gap = gen->add_subcommand("gap", "Integrality-gap family (normalized)");
  gap->add_option("--d", args->d, "Depth")->required();
  gap->add_option("--k", args->k, "Delay range 0..k")->required();
  gap->add_option("--cover", args->cover, "Also write the j/T fractional cover here");
  gap->callback([&, args] {
    action = [&, args] {
      const GapInstance inst = GenGapInstance(args->d, args->k);
      if (!args->cover.empty()) WriteJsonFile(args->cover, CoverToJson(inst.norm, inst.cover));
      Emit(g, NormalizedToJson(inst.norm));
      return kExitOk;
    };
  });

  auto* random = gen->add_subcommand("random", "Random layered normalized instance");
  random->add_option("--d", args->d, "Depth")->required();
  random->add_option("--n", args->n, "Number of jobs")->required();
  random->add_option("--cost-min", args->cost_min);
  random->add_option("--cost-max", args->cost_max);
  random->add_option("--delay-min", args->delay_min);
  random->add_option("--delay-max", args->delay_max);
  random->add_option("--slack", args->slack, "Deadline as a fraction of the longest chain");
  random->add_option("--edge-prob", args->edge_probability);
  random->callback([&, args] {
    action = [&, args] {
      RandomLayeredParams params;
      params.depth = args->d;
      params.num_jobs = args->n;
      params.seed = g.seed;
      params.cost_min = args->cost_min;
      params.cost_max = args->cost_max;
      params.delay_min = args->delay_min;
      params.delay_max = args->delay_max;
      params.slack_factor = ParseRational(args->slack);
      params.edge_probability = args->edge_probability;
      Emit(g, NormalizedToJson(GenRandomLayered(params)));
      return kExitOk;
    };
  });

  for (const char* name : {"dvd-path", "dvd-tournament"}) {
    const std::string family = name;
    auto* sub = gen->add_subcommand(family, family == "dvd-path" ? "Directed path P_n"
                                                                   : "Acyclic tournament D_n");
    sub->add_option("--n", args->n, "Vertices")->required();
    sub->add_option("--k", args->k, "Path length (vertices)")->required();
    sub->callback([&, args, family] {
      action = [&, args, family] {
        const DvdInstance dvd =
            family == "dvd-path" ? GenPath(args->n, args->k) : GenTournament(args->n, args->k);
        Emit(g, DvdToJson(dvd));
        return kExitOk;
      };
    });
  }
}

// --- normalize, lp, solve ---------------------------------------------------

struct IoArgs {
  std::string in;
  std::string map;
  std::string eps = "1/20";
  bool exact = false;
  int max_cuts = 0;
  std::string algo = "det";
  int trials = 1;
  int cap = 25;
};

void AddNormalize(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto* sub = app.add_subcommand("normalize", "Normalize a general instance");
  sub->add_option("--in", args->in, "Instance file")->required();
  sub->add_option("--map", args->map, "Write the origin map here");
  sub->callback([&, args] {
    action = [&, args] {
      const NormalizedInstance norm = Normalize(InstanceFromJson(ReadJsonFile(args->in)));
      if (!args->map.empty()) WriteJsonFile(args->map, OriginMapToJson(norm));
      Emit(g, NormalizedToJson(norm));
      return kExitOk;
    };
  });
}

LpOptions MakeLpOptions(const IoArgs& args) {
  LpOptions options;
  options.mode = args.exact ? LpMode::kExactSmallDepth : LpMode::kApprox;
  options.epsilon = ParseRational(args.eps);
  if (options.epsilon <= 0) ThrowInvalid("--eps must be positive");
  options.max_cuts = args.max_cuts;
  return options;
}

void AddLp(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto* sub = app.add_subcommand("lp", "Solve the covering LP");
  sub->add_option("--in", args->in, "Normalized instance")->required();
  auto* exact = sub->add_flag("--exact", args->exact, "Separate over the enumerated blocker");
  sub->add_option("--eps", args->eps, "Approximation parameter")->excludes(exact);
  sub->add_option("--max-cuts", args->max_cuts, "Cut cap (0: 50 n)");
  sub->callback([&, args] {
    action = [&, args] {
      const LoadedInstance loaded = LoadAsNormalized(ReadJsonFile(args->in));
      const LpResult lp = SolveLp(loaded.norm, Layer(loaded.norm), MakeLpOptions(*args));
      Emit(g, CoverToJson(loaded.norm, lp.cover));
      return kExitOk;
    };
  });
}

void AddSolve(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto* sub = app.add_subcommand("solve", "LP plus rounding");
  sub->add_option("--in", args->in, "Instance (general or normalized)")->required();
  sub->add_option("--algo", args->algo, "Algorithm")
      ->check(CLI::IsMember({"det", "rand", "slack-det", "slack-rand", "naive", "bye", "exact"}));
  sub->add_option("--eps", args->eps, "LP approximation parameter");
  sub->add_flag("--exact-lp", args->exact, "Exact LP over the enumerated blocker");
  sub->add_option("--trials", args->trials, "Draws for randomized algorithms")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap", args->cap, "Job cap for the exact oracle");
  sub->callback([&, args] {
    action = [&, args] {
      const LoadedInstance loaded = LoadAsNormalized(ReadJsonFile(args->in));
      const NormalizedInstance& norm = loaded.norm;
      SolveOptions options;
      options.algorithm = *ParseAlgorithm(args->algo);
      options.lp = MakeLpOptions(*args);
      options.seed = g.seed;
      options.trials = args->trials;
      options.exact_limits.max_jobs = args->cap;
      const SolveReport report = Solve(norm, options);
      Json out = SolutionToJson(norm, report.solution);
      out["algorithm"] = args->algo;
      out["used"] = AlgorithmName(report.used);
      out["seed"] = g.seed;
      out["trials"] = report.trials;
      if (report.trials > 1) out["mean_cost"] = RationalToJson(report.mean_cost);
      out["lp_objective"] = RationalToJson(report.cover.objective);
      out["lp_quality"] = report.cover.quality == CoverQuality::kExact ? "exact" : "approx";
      if (report.cover.quality == CoverQuality::kApprox) {
        out["eps"] = RationalToJson(report.cover.epsilon);
      }
      out["ratio"] = RatioToLp(report.solution.cost, report.cover.objective);
      out["bound"] = RationalToJson(report.bound);
      out["depth"] = report.depth;
      out["feasible"] = report.all_feasible;
      if (loaded.original) {
        Json choice = Json::object();
        for (const auto& [id, alt] : DenormalizeSolution(norm, report.solution)) choice[id] = alt;
        out["choice"] = std::move(choice);
      }
      Emit(g, out);
      return report.all_feasible ? kExitOk : kExitInfeasible;
    };
  });
}

// --- exact -------------------------------------------------------------------

void AddExact(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto* exact = app.add_subcommand("exact", "Brute-force oracles")->require_subcommand(1);
  for (const char* name : {"tct", "dvd", "lp", "blocker"}) {
    const std::string kind = name;
    auto* sub = exact->add_subcommand(kind);
    sub->add_option("--in", args->in, kind == "dvd" ? "DVD instance" : "Instance")->required();
    sub->add_option("--cap", args->cap, "Job (or vertex) cap");
    sub->callback([&, args, kind] {
      action = [&, args, kind]() -> int {
        const Json input = ReadJsonFile(args->in);
        if (kind == "dvd") {
          const DvdInstance dvd = DvdFromJson(input);
          Json vertices = Json::array();
          const std::vector<int> set = ExactDvdOpt(dvd, args->cap);
          for (int v : set) vertices.push_back(dvd.vertices()[v]);
          Emit(g, Json{{"vertices", std::move(vertices)}, {"size", set.size()}});
          return kExitOk;
        }
        const LoadedInstance loaded = LoadAsNormalized(input);
        const NormalizedInstance& norm = loaded.norm;
        BlockerLimits limits;
        limits.max_jobs = args->cap;
        if (kind == "tct") {
          Emit(g, SolutionToJson(norm, ExactTctOpt(norm, limits)));
        } else if (kind == "lp") {
          Emit(g, CoverToJson(norm, ExactLpOpt(norm, limits)));
        } else {
          const auto chains = EnumerateBlocker(norm, limits);
          Json list = Json::array();
          for (const auto& chain : chains) list.push_back(IdList(norm, chain));
          Emit(g, Json{{"count", chains.size()}, {"chains", std::move(list)}});
        }
        return kExitOk;
      };
    });
  }
}

// --- verify ------------------------------------------------------------------

void AddVerify(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto solution = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("verify", "Check a solution against an instance");
  sub->add_option("--instance,--in", args->in, "Instance file")->required();
  sub->add_option("--solution", *solution, "Solution file")->required();
  sub->callback([&, args, solution] {
    action = [&, args, solution] {
      const LoadedInstance loaded = LoadAsNormalized(ReadJsonFile(args->in));
      const NormalizedInstance& norm = loaded.norm;
      std::optional<Extended> declared;
      const AccelerationSet sol = SolutionFromJson(norm, ReadJsonFile(*solution), &declared);
      const FeasibilityReport check = CheckFeasible(norm, sol);
      Json out{{"feasible", check.feasible},
               {"max_delay", ExtendedToJson(check.max_delay)},
               {"deadline", RationalToJson(norm.deadline())},
               {"cost", ExtendedToJson(sol.cost)}};
      if (declared) {
        out["declared_cost"] = ExtendedToJson(*declared);
        if (*declared != sol.cost) {
          std::cerr << "warning: declared cost " << ToString(*declared)
                    << " differs from recomputed cost " << ToString(sol.cost) << "\n";
          out["cost_mismatch"] = true;
        }
      }
      if (!check.feasible) {
        out["violated_chain"] = IdList(norm, check.violated_chain);
        std::cerr << "infeasible: chain " << ChainText(norm, check.violated_chain)
                  << " has delay " << ToString(check.max_delay) << " > "
                  << ToString(norm.deadline()) << "\n";
      }
      Emit(g, out);
      return check.feasible ? kExitOk : kExitInfeasible;
    };
  });
}

// --- bench -------------------------------------------------------------------

void AddBench(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto config = std::make_shared<std::string>();
  auto options = std::make_shared<BenchOptions>();
  auto* sub = app.add_subcommand("bench", "Run an experiment config");
  sub->add_option("--config", *config, "Config file")->required();
  sub->add_option("--threads", options->threads, "Worker threads (0: all cores)");
  sub->add_flag("--timing", options->timing, "Record wall times in the JSON report");
  sub->callback([&, config, options] {
    action = [&, config, options] {
      BenchOptions run = *options;
      run.seed = g.seed;
      if (g.format == "table") run.timing = true;
      const Json report = RunBench(ReadJsonFile(*config), run);
      if (g.format == "table") {
        WriteText(g.out, BenchTable(report));
      } else {
        WriteJsonFile(g.out, report);
      }
      return kExitOk;
    };
  });
}

// --- reduce, tensor, certify ---------------------------------------------------

void AddReductions(CLI::App& app, const Globals& g, std::function<int()>& action) {
  auto args = std::make_shared<IoArgs>();
  auto k = std::make_shared<int>(0);
  auto d = std::make_shared<int>(0);
  auto r = std::make_shared<int>(0);

  auto* reduce = app.add_subcommand("reduce", "Reductions")->require_subcommand(1);
  auto* to_tct = reduce->add_subcommand("dvd-to-tct", "DVD(k) to a normalized instance");
  to_tct->add_option("--in", args->in, "DVD instance")->required();
  to_tct->add_option("--k", *k, "Override k");
  to_tct->callback([&, args, k] {
    action = [&, args, k] {
      DvdInstance dvd = DvdFromJson(ReadJsonFile(args->in));
      if (*k > 0) dvd = dvd.WithK(*k);
      Emit(g, NormalizedToJson(DvdToTct(dvd)));
      return kExitOk;
    };
  });

  auto* tensor = app.add_subcommand("tensor", "Tensor product with the tournament D_d");
  tensor->add_option("--in", args->in, "DVD instance")->required();
  tensor->add_option("--d", *d, "Tournament size")->required();
  tensor->callback([&, args, d] {
    action = [&, args, d] {
      Emit(g, DvdToJson(TensorWithTournament(DvdFromJson(ReadJsonFile(args->in)), *d)));
      return kExitOk;
    };
  });

  auto* certify = app.add_subcommand("certify", "Certificates")->require_subcommand(1);
  auto* packing = certify->add_subcommand("packing", "Disjoint k-paths in the tensored path");
  packing->add_option("--r", *r)->required();
  packing->add_option("--d", *d)->required();
  packing->add_option("--k", *k)->required();
  packing->callback([&, r, d, k] {
    action = [&, r, d, k] {
      const int n = *k * (*r + 1) - 1;
      const auto paths = PathPackingCertificate(*r, *d, *k);
      const bool disjoint = VerifyPathPacking(paths, n, *d, *k);
      const DvdInstance tensor = TensorWithTournament(GenPath(n, *k), *d);
      std::vector<int> cover;
      Json cover_json = Json::array();
      for (int s = *k; s <= n; s += *k) {
        for (int i = 1; i <= *d; ++i) {
          cover.push_back(TensorIndex(tensor, s, i));
          cover_json.push_back(Json::array({s, i}));
        }
      }
      const bool cover_ok = DestroysAllKPaths(tensor, cover);
      Json path_json = Json::array();
      for (const auto& path : paths) {
        Json p = Json::array();
        for (const auto& [s, t] : path) p.push_back(Json::array({s, t}));
        path_json.push_back(std::move(p));
      }
      const bool pinned = disjoint && cover_ok && paths.size() == cover.size();
      Json out{{"n", n},
               {"d", *d},
               {"k", *k},
               {"paths", std::move(path_json)},
               {"paths_disjoint", disjoint},
               {"cover", std::move(cover_json)},
               {"cover_feasible", cover_ok},
               {"lower_bound", paths.size()},
               {"upper_bound", cover.size()}};
      if (pinned) out["opt"] = cover.size();
      Emit(g, out);
      return pinned ? kExitOk : kExitInfeasible;
    };
  });
}

int Main(int argc, char** argv) {
  CLI::App app{"Deadline time-cost tradeoff solver"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Output file ('-' for stdout)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::function<int()> action;
  AddGen(app, g, action);
  AddNormalize(app, g, action);
  AddLp(app, g, action);
  AddSolve(app, g, action);
  AddExact(app, g, action);
  AddVerify(app, g, action);
  AddBench(app, g, action);
  AddReductions(app, g, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return action ? action() : kExitInput;
  } catch (const TctError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kInvalidInput:
        return kExitInput;
      case ErrorKind::kInfeasible:
        return kExitInfeasible;
      case ErrorKind::kResourceCap:
        return kExitCap;
      case ErrorKind::kInternal:
        return kExitInternal;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace tct::cli

int main(int argc, char** argv) { return tct::cli::Main(argc, argv); }

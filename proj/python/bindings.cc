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

// Python bindings. Every entry point takes and returns JSON text in the file
// formats of tct/json_io.h; the tct_solver package converts to and from
// Python objects.

#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/json_io.h"
#include "tct/lp_engine.h"
#include "tct/normalize.h"
#include "tct/solver.h"
#include "../tools/cli_common.h"

namespace py = pybind11;

namespace tct {
namespace {

LpOptions MakeLpOptions(bool exact, const std::string& eps) {
  LpOptions options;
  options.mode = exact ? LpMode::kExactSmallDepth : LpMode::kApprox;
  options.epsilon = ParseRational(eps);
  if (options.epsilon <= 0) ThrowInvalid("eps must be positive");
  return options;
}

std::string SolveJson(const std::string& instance, const std::string& algorithm,
                      std::uint64_t seed, int trials, const std::string& eps, bool exact_lp) {
  const cli::LoadedInstance loaded = cli::LoadAsNormalized(Json::parse(instance));
  const NormalizedInstance& norm = loaded.norm;
  SolveOptions options;
  const auto parsed = ParseAlgorithm(algorithm);
  if (!parsed) ThrowInvalid("unknown algorithm: " + algorithm);
  if (trials < 1) ThrowInvalid("trials must be positive");
  options.algorithm = *parsed;
  options.lp = MakeLpOptions(exact_lp, eps);
  options.seed = seed;
  options.trials = trials;
  const SolveReport report = Solve(norm, options);
  Json out = SolutionToJson(norm, report.solution);
  out["algorithm"] = algorithm;
  out["used"] = AlgorithmName(report.used);
  out["seed"] = seed;
  out["trials"] = report.trials;
  out["mean_cost"] = RationalToJson(report.mean_cost);
  out["lp_objective"] = RationalToJson(report.cover.objective);
  out["lp_quality"] = report.cover.quality == CoverQuality::kExact ? "exact" : "approx";
  out["bound"] = RationalToJson(report.bound);
  out["depth"] = report.depth;
  out["feasible"] = report.all_feasible;
  if (loaded.original) {
    Json choice = Json::object();
    for (const auto& [id, alt] : DenormalizeSolution(norm, report.solution)) choice[id] = alt;
    out["choice"] = std::move(choice);
  }
  return out.dump();
}

std::string SolveLpJson(const std::string& instance, bool exact, const std::string& eps) {
  const cli::LoadedInstance loaded = cli::LoadAsNormalized(Json::parse(instance));
  const LpResult lp = SolveLp(loaded.norm, Layer(loaded.norm), MakeLpOptions(exact, eps));
  return CoverToJson(loaded.norm, lp.cover).dump();
}

std::string ExactOptJson(const std::string& instance) {
  const cli::LoadedInstance loaded = cli::LoadAsNormalized(Json::parse(instance));
  return SolutionToJson(loaded.norm, ExactTctOpt(loaded.norm)).dump();
}

std::string CheckJson(const std::string& instance, const std::string& solution) {
  const NormalizedInstance norm = NormalizedFromJson(Json::parse(instance));
  const AccelerationSet sol = SolutionFromJson(norm, Json::parse(solution));
  const FeasibilityReport report = CheckFeasible(norm, sol);
  Json chain = Json::array();
  for (int v : report.violated_chain) chain.push_back(norm.id(v));
  Json out;
  out["feasible"] = report.feasible;
  out["cost"] = ExtendedToJson(sol.cost);
  out["max_delay"] = ExtendedToJson(report.max_delay);
  out["violated_chain"] = std::move(chain);
  return out.dump();
}

std::string NormalizeJson(const std::string& instance) {
  return NormalizedToJson(Normalize(InstanceFromJson(Json::parse(instance)))).dump();
}

std::string GapJson(int d, int k) { return NormalizedToJson(GenGapInstance(d, k).norm).dump(); }

std::string RandomJson(int depth, int num_jobs, std::uint64_t seed) {
  RandomLayeredParams params;
  params.depth = depth;
  params.num_jobs = num_jobs;
  params.seed = seed;
  return NormalizedToJson(GenRandomLayered(params)).dump();
}

}  // namespace
}  // namespace tct

PYBIND11_MODULE(_tct, m) {
  m.doc() = "Deadline time-cost tradeoff solver (JSON-text interface)";

  static py::exception<tct::TctError> base(m, "TctError", PyExc_RuntimeError);
  static py::exception<tct::TctError> invalid(m, "InvalidInputError", base.ptr());
  static py::exception<tct::TctError> infeasible(m, "InfeasibleError", base.ptr());
  static py::exception<tct::TctError> capped(m, "ResourceCapError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tct::TctError& e) {
      switch (e.kind()) {
        case tct::ErrorKind::kInvalidInput:
          invalid(e.what());
          return;
        case tct::ErrorKind::kInfeasible:
          infeasible(e.what());
          return;
        case tct::ErrorKind::kResourceCap:
          capped(e.what());
          return;
        default:
          base(e.what());
          return;
      }
    } catch (const nlohmann::json::exception& e) {
      invalid(e.what());
    }
  });

  m.attr("DEFAULT_SEED") = tct::kDefaultSeed;
  m.def("solve", &tct::SolveJson, py::arg("instance"), py::arg("algorithm"), py::arg("seed"),
        py::arg("trials"), py::arg("eps"), py::arg("exact_lp"));
  m.def("solve_lp", &tct::SolveLpJson, py::arg("instance"), py::arg("exact"), py::arg("eps"));
  m.def("exact_opt", &tct::ExactOptJson, py::arg("instance"));
  m.def("check_feasible", &tct::CheckJson, py::arg("instance"), py::arg("solution"));
  m.def("normalize", &tct::NormalizeJson, py::arg("instance"));
  m.def("gen_gap", &tct::GapJson, py::arg("d"), py::arg("k"));
  m.def("gen_random", &tct::RandomJson, py::arg("depth"), py::arg("num_jobs"), py::arg("seed"));
}

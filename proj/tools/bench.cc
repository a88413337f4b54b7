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

#include "bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "cli_common.h"
#include "tct/error.h"
#include "tct/exact_oracle.h"
#include "tct/feasibility.h"
#include "tct/generators.h"
#include "tct/solver.h"

namespace tct::cli {
namespace {

std::uint64_t Mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct BenchInstance {
  std::string name;
  std::string family;
  NormalizedInstance norm;
  std::uint64_t seed = 0;
  int gap_d = 0;  // > 0 for the gap family
  int gap_k = 0;
};

// An int or a list of ints.
std::vector<int> IntList(const Json& entry, const char* key, int fallback) {
  if (!entry.contains(key)) return {fallback};
  const Json& value = entry.at(key);
  if (value.is_number_integer()) return {value.get<int>()};
  if (!value.is_array()) ThrowInvalid(std::string("\"") + key + "\" must be an int or a list");
  std::vector<int> out;
  for (const Json& v : value) {
    if (!v.is_number_integer()) ThrowInvalid(std::string("\"") + key + "\" must hold ints");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<BenchInstance> BuildInstances(const Json& config, std::uint64_t seed) {
  std::vector<BenchInstance> out;
  if (!config.contains("families")) return out;
  const Json& families = config.at("families");
  if (!families.is_array()) ThrowInvalid("\"families\" must be a list");
  for (std::size_t f = 0; f < families.size(); ++f) {
    const Json& entry = families[f];
    const std::string family = entry.value("family", "");
    if (family == "gap") {
      for (int d : IntList(entry, "d", 3)) {
        for (int k : IntList(entry, "k", 2)) {
          BenchInstance inst{"gap-d" + std::to_string(d) + "-k" + std::to_string(k), family,
                             GenGapInstance(d, k).norm, Mix(seed, f), d, k};
          out.push_back(std::move(inst));
        }
      }
    } else if (family == "random") {
      const int count = entry.value("count", 1);
      for (int d : IntList(entry, "d", 4)) {
        for (int n : IntList(entry, "n", 20)) {
          for (int rep = 0; rep < count; ++rep) {
            RandomLayeredParams params;
            params.depth = d;
            params.num_jobs = n;
            params.seed = Mix(Mix(Mix(seed, f), d * 1000 + n), rep);
            params.cost_min = entry.value("cost_min", params.cost_min);
            params.cost_max = entry.value("cost_max", params.cost_max);
            params.delay_min = entry.value("delay_min", params.delay_min);
            params.delay_max = entry.value("delay_max", params.delay_max);
            if (entry.contains("slack")) params.slack_factor = RationalFromJson(entry.at("slack"));
            params.edge_probability = entry.value("edge_probability", params.edge_probability);
            BenchInstance inst;
            inst.name = "random-d" + std::to_string(d) + "-n" + std::to_string(n) + "-" +
                        std::to_string(rep);
            inst.family = family;
            inst.norm = GenRandomLayered(params);
            inst.seed = params.seed;
            out.push_back(std::move(inst));
          }
        }
      }
    } else if (family == "dvd-path" || family == "dvd-tournament") {
      for (int n : IntList(entry, "n", 6)) {
        for (int k : IntList(entry, "k", 2)) {
          const DvdInstance dvd = family == "dvd-path" ? GenPath(n, k) : GenTournament(n, k);
          BenchInstance inst;
          inst.name = family + "-n" + std::to_string(n) + "-k" + std::to_string(k);
          inst.family = family;
          inst.norm = DvdToTct(dvd);
          inst.seed = Mix(Mix(seed, f), n * 1000 + k);
          out.push_back(std::move(inst));
        }
      }
    } else if (family == "file") {
      BenchInstance inst;
      inst.name = entry.value("name", entry.value("path", ""));
      inst.family = family;
      inst.norm = LoadAsNormalized(ReadJsonFile(entry.value("path", ""))).norm;
      inst.seed = Mix(seed, f);
      out.push_back(std::move(inst));
    } else {
      ThrowInvalid("unknown family '" + family + "'");
    }
  }
  return out;
}

struct BenchSettings {
  std::vector<Algorithm> algorithms;
  LpOptions lp;
  int trials = 10;
  int exact_cap = 22;
  bool timing = false;
};

BenchSettings ParseSettings(const Json& config) {
  BenchSettings s;
  if (config.contains("algorithms")) {
    for (const Json& name : config.at("algorithms")) {
      const auto algorithm = ParseAlgorithm(name.get<std::string>());
      if (!algorithm) ThrowInvalid("unknown algorithm '" + name.get<std::string>() + "'");
      s.algorithms.push_back(*algorithm);
    }
  } else {
    s.algorithms = {Algorithm::kDeterministic, Algorithm::kRandomized,
                    Algorithm::kSlackDeterministic, Algorithm::kSlackRandomized,
                    Algorithm::kNaive, Algorithm::kBarYehudaEven};
  }
  if (config.contains("lp")) {
    const Json& lp = config.at("lp");
    if (lp.value("mode", "approx") == "exact") s.lp.mode = LpMode::kExactSmallDepth;
    if (lp.contains("eps")) s.lp.epsilon = RationalFromJson(lp.at("eps"));
  }
  s.trials = config.value("trials", s.trials);
  s.exact_cap = config.value("exact_cap", s.exact_cap);
  if (s.trials < 1) ThrowInvalid("trials must be at least 1");
  return s;
}

Json RatioJson(const Extended& cost, const Rational& lp) {
  if (cost.is_infinite()) return Json(nullptr);
  if (lp == 0) return cost.value() == 0 ? Json(1.0) : Json(nullptr);
  return Json(ToDouble(Rational(cost.value() / lp)));
}

struct InstanceResult {
  Json rows = Json::array();
  Json gap = nullptr;
};

InstanceResult RunInstance(const BenchInstance& inst, const BenchSettings& s) {
  InstanceResult result;
  const NormalizedInstance& norm = inst.norm;
  const LayeredView layered = Layer(norm);
  const int d = layered.depth();
  const int n = norm.num_jobs();

  std::optional<AccelerationSet> opt;
  if (inst.gap_d > 0 || n <= s.exact_cap) {
    BlockerLimits limits;
    limits.max_jobs = std::max(s.exact_cap, 0);
    try {
      opt = ExactTctOpt(norm, limits);
    } catch (const TctError& e) {
      if (e.kind() != ErrorKind::kResourceCap && e.kind() != ErrorKind::kInfeasible) throw;
    }
  }

  Json base{{"instance", inst.name}, {"family", inst.family}, {"n", n}, {"d", d}};
  FractionalCover cover;
  try {
    cover = SolveLp(norm, layered, s.lp).cover;
  } catch (const TctError& e) {
    Json row = base;
    row["error"] = e.what();
    result.rows.push_back(std::move(row));
    return result;
  }

  for (std::size_t a = 0; a < s.algorithms.size(); ++a) {
    const auto start = std::chrono::steady_clock::now();
    const Algorithm used = EffectiveAlgorithm(s.algorithms[a], d);
    const int trials = IsRandomized(used) ? s.trials : 1;
    Json row = base;
    row["algorithm"] = AlgorithmName(s.algorithms[a]);
    row["used"] = AlgorithmName(used);
    row["trials"] = trials;
    row["lp"] = RationalToJson(cover.objective);
    row["lp_quality"] = cover.quality == CoverQuality::kExact ? "exact" : "approx";
    try {
      std::optional<AccelerationSet> best;
      Rational total = 0;
      Rational total_sq = 0;
      bool feasible = true;
      for (int t = 0; t < trials; ++t) {
        AccelerationSet sol;
        if (used == Algorithm::kExact) {
          if (!opt) throw TctError(ErrorKind::kResourceCap, "no oracle");
          sol = *opt;
        } else {
          Rng rng(Mix(Mix(inst.seed, a), t));
          sol = RunAlgorithm(used, norm, layered, cover.x, rng);
        }
        feasible = feasible && CheckFeasible(norm, sol).feasible;
        if (sol.cost.is_finite()) {
          total += sol.cost.value();
          total_sq += sol.cost.value() * sol.cost.value();
        }
        if (!best || sol.cost < best->cost) best = std::move(sol);
      }
      const Rational bound = GuaranteeFactor(used, d, n) * cover.objective;
      row["cost"] = ExtendedToJson(best->cost);
      if (trials > 1) row["mean_cost"] = RationalToJson(Rational(total / trials));
      row["ratio"] = RatioJson(best->cost, cover.objective);
      row["bound"] = RationalToJson(bound);
      row["feasible"] = feasible;
      bool pass = feasible;
      if (trials > 1) {
        // Randomized guarantees hold in expectation: accept unless the mean
        // exceeds the bound by more than three standard errors.
        const Rational mean = total / trials;
        const double var = std::max(
            0.0, ToDouble(Rational(total_sq / trials - mean * mean)) * trials / (trials - 1));
        pass = pass && best->cost.is_finite() &&
               ToDouble(Rational(mean - bound)) <= 3.0 * std::sqrt(var / trials);
      } else {
        pass = pass && best->cost <= Extended(bound);
      }
      if (opt) {
        row["opt"] = ExtendedToJson(opt->cost);
        pass = pass && best->cost >= opt->cost;
      } else {
        row["opt"] = "no oracle";
      }
      row["pass"] = pass;
    } catch (const TctError& e) {
      row["error"] = e.what();
      row["pass"] = false;
    }
    if (s.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      row["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    result.rows.push_back(std::move(row));
  }

  if (inst.gap_d > 0) {
    const int dd = inst.gap_d;
    const int k = inst.gap_k;
    const Rational frac(k + 1);
    const Rational predicted = Frac(dd * k, 2) / frac;
    Json gap{{"d", dd}, {"k", k}, {"frac", RationalToJson(frac)},
             {"lp", RationalToJson(cover.objective)}};
    if (opt) {
      const Rational ratio = opt->cost.value() / frac;
      gap["opt"] = ExtendedToJson(opt->cost);
      gap["ratio"] = RationalToJson(ratio);
      gap["predicted"] = RationalToJson(predicted);
      gap["match"] = ratio == predicted;
    } else {
      gap["opt"] = "no oracle";
      gap["predicted"] = RationalToJson(predicted);
    }
    result.gap = std::move(gap);
  }
  return result;
}

std::string Cell(const Json& value) {
  if (value.is_null()) return "-";
  if (value.is_boolean()) return value.get<bool>() ? "pass" : "FAIL";
  if (value.is_number_float()) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value.get<double>());
    return buffer;
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text.find('/') != std::string::npos) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.4f", ToDouble(ParseRational(text)));
      return buffer;
    }
    return text;
  }
  return value.dump();
}

}  // namespace

Json RunBench(const Json& config, const BenchOptions& options) {
  if (!config.is_object()) ThrowInvalid("bench config must be a JSON object");
  const std::uint64_t seed =
      config.contains("seed") ? config.at("seed").get<std::uint64_t>() : options.seed;
  BenchSettings settings = ParseSettings(config);
  settings.timing = options.timing;
  const std::vector<BenchInstance> instances = BuildInstances(config, seed);

  std::vector<InstanceResult> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        results[i] = RunInstance(instances[i], settings);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int threads = options.threads > 0 ? options.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max<int>(1, static_cast<int>(instances.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Json report{{"seed", seed}, {"rows", Json::array()}, {"gap_curve", Json::array()}};
  for (InstanceResult& r : results) {
    for (Json& row : r.rows) report["rows"].push_back(std::move(row));
    if (!r.gap.is_null()) report["gap_curve"].push_back(std::move(r.gap));
  }
  return report;
}

std::string BenchTable(const Json& report) {
  static const std::vector<std::pair<const char*, const char*>> kColumns = {
      {"instance", "instance"}, {"algorithm", "algo"}, {"n", "n"},
      {"d", "d"},               {"lp", "lp"},          {"cost", "cost"},
      {"ratio", "ratio"},       {"bound", "bound"},    {"opt", "opt"},
      {"pass", "pass"},         {"wall_ms", "ms"}};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& [key, title] : kColumns) header.push_back(title);
  cells.push_back(header);
  for (const Json& row : report.at("rows")) {
    std::vector<std::string> line;
    for (const auto& [key, title] : kColumns) {
      if (row.contains("error") && std::string(key) == "cost") {
        line.push_back(row.at("error").get<std::string>());
      } else {
        line.push_back(row.contains(key) ? Cell(row.at(key)) : "-");
      }
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c] << std::string(width[c] - line[c].size() + (c + 1 < line.size() ? 2 : 0), ' ');
    }
    out << "\n";
  }
  if (!report.at("gap_curve").empty()) {
    out << "\ngap curve (OPT / fractional cost)\n";
    for (const Json& g : report.at("gap_curve")) {
      out << "  d=" << g.at("d").dump() << " k=" << g.at("k").dump()
          << "  opt=" << Cell(g.at("opt")) << "  frac=" << Cell(g.at("frac"));
      if (g.contains("ratio")) {
        out << "  ratio=" << Cell(g.at("ratio")) << "  predicted=" << Cell(g.at("predicted"))
            << (g.at("match").get<bool>() ? "  match" : "  MISMATCH");
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace tct::cli

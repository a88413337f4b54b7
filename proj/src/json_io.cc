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

#include "tct/json_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "tct/error.h"
#include "tct/feasibility.h"

namespace tct {
namespace {

const Json& Field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    ThrowInvalid(std::string("missing field \"") + name + "\"");
  }
  return json.at(name);
}

std::string StringOf(const Json& json, const char* what) {
  if (!json.is_string()) ThrowInvalid(std::string(what) + " must be a string");
  return json.get<std::string>();
}

}  // namespace

Json RationalToJson(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(value.get_num().get_si()));
  }
  return Json(ToString(value));
}

Json ExtendedToJson(const Extended& value) {
  if (value.is_infinite()) return Json("inf");
  return RationalToJson(value.value());
}

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    }
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d)) ThrowInvalid("non-finite number");
    return RationalFromDouble(d);
  }
  if (value.is_string()) return ParseRational(value.get<std::string>());
  ThrowInvalid("expected a number or a \"p/q\" string, got " + value.dump());
}

Extended ExtendedFromJson(const Json& value) {
  if (value.is_string()) return ParseExtended(value.get<std::string>());
  return Extended(RationalFromJson(value));
}

TctInstance InstanceFromJson(const Json& json) {
  std::vector<Job> jobs;
  const Json& job_list = Field(json, "jobs");
  if (!job_list.is_array()) ThrowInvalid("\"jobs\" must be an array");
  for (const Json& entry : job_list) {
    Job job;
    job.id = StringOf(Field(entry, "id"), "job id");
    const Json& alts = Field(entry, "alternatives");
    if (!alts.is_array()) ThrowInvalid("\"alternatives\" must be an array");
    for (const Json& pair : alts) {
      if (!pair.is_array() || pair.size() != 2) {
        ThrowInvalid("alternative of '" + job.id + "' must be [delay, cost]");
      }
      job.alternatives.push_back(
          Alternative{ExtendedFromJson(pair[0]), ExtendedFromJson(pair[1])});
    }
    jobs.push_back(std::move(job));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (json.contains("edges")) {
    for (const Json& edge : json.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) ThrowInvalid("edge must be [src, dst]");
      edges.emplace_back(StringOf(edge[0], "edge endpoint"),
                         StringOf(edge[1], "edge endpoint"));
    }
  }
  const Extended deadline = ExtendedFromJson(Field(json, "deadline"));
  if (deadline.is_infinite()) ThrowInvalid("deadline must be finite");
  return TctInstance(std::move(jobs), edges, deadline.value());
}

Json InstanceToJson(const TctInstance& instance) {
  Json jobs = Json::array();
  for (const Job& job : instance.jobs()) {
    Json alts = Json::array();
    for (const Alternative& alt : job.alternatives) {
      alts.push_back(Json::array({ExtendedToJson(alt.delay), ExtendedToJson(alt.cost)}));
    }
    jobs.push_back(Json{{"id", job.id}, {"alternatives", std::move(alts)}});
  }
  Json edges = Json::array();
  for (const auto& [from, to] : instance.EdgeIds()) {
    edges.push_back(Json::array({from, to}));
  }
  return Json{{"jobs", std::move(jobs)},
              {"edges", std::move(edges)},
              {"deadline", RationalToJson(instance.deadline())}};
}

NormalizedInstance NormalizedFromJson(const Json& json) {
  return NormalizedInstance(InstanceFromJson(json));
}

Json OriginMapToJson(const NormalizedInstance& norm) {
  Json out = Json::object();
  if (!norm.origin_map()) return out;
  for (int v = 0; v < norm.num_jobs(); ++v) {
    const OriginEntry& entry = (*norm.origin_map())[v];
    out[norm.id(v)] = Json{
        {"original", entry.original_job},
        {"copy", entry.copy_index},
        {"alternative",
         entry.alternative_index < 0 ? Json(nullptr) : Json(entry.alternative_index)}};
  }
  return out;
}

Json SolutionToJson(const NormalizedInstance& norm, const AccelerationSet& sol) {
  Json fast = Json::array();
  for (int v : sol.fast) fast.push_back(norm.id(v));
  return Json{{"fast", std::move(fast)}, {"cost", ExtendedToJson(sol.cost)}};
}

AccelerationSet SolutionFromJson(const NormalizedInstance& norm, const Json& json,
                                 std::optional<Extended>* declared_cost) {
  const Json& fast = Field(json, "fast");
  if (!fast.is_array()) ThrowInvalid("\"fast\" must be an array");
  std::vector<int> indices;
  for (const Json& id : fast) indices.push_back(norm.base().IndexOf(StringOf(id, "job id")));
  if (declared_cost) {
    *declared_cost = json.contains("cost")
                         ? std::optional<Extended>(ExtendedFromJson(json.at("cost")))
                         : std::nullopt;
  }
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    ThrowInvalid("solution lists a job twice");
  }
  return MakeAccelerationSet(norm, std::move(indices));
}

Json CoverToJson(const NormalizedInstance& norm, const FractionalCover& cover) {
  Json x = Json::object();
  for (int v = 0; v < norm.num_jobs(); ++v) x[norm.id(v)] = RationalToJson(cover.x[v]);
  Json out{{"x", std::move(x)},
           {"objective", RationalToJson(cover.objective)},
           {"quality", cover.quality == CoverQuality::kExact ? "exact" : "approx"},
           {"eps", RationalToJson(cover.epsilon)}};
  return out;
}

FractionalCover CoverFromJson(const NormalizedInstance& norm, const Json& json) {
  const Json& x = Field(json, "x");
  if (!x.is_object()) ThrowInvalid("\"x\" must be an object");
  FractionalCover cover;
  cover.x.assign(norm.num_jobs(), Rational(0));
  for (const auto& [id, value] : x.items()) {
    const Rational r = RationalFromJson(value);
    if (r < 0 || r > 1) ThrowInvalid("x['" + id + "'] outside [0,1]");
    cover.x[norm.base().IndexOf(id)] = r;
  }
  cover.objective = CoverObjective(norm, cover.x);
  if (json.contains("quality") && json.at("quality") == "approx") {
    cover.quality = CoverQuality::kApprox;
    if (json.contains("eps")) cover.epsilon = RationalFromJson(json.at("eps"));
  }
  return cover;
}

DvdInstance DvdFromJson(const Json& json) {
  std::vector<std::string> names;
  for (const Json& name : Field(json, "vertices")) names.push_back(StringOf(name, "vertex"));
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index.emplace(names[i], i);
  auto lookup = [&](const Json& name) {
    auto it = index.find(StringOf(name, "edge endpoint"));
    if (it == index.end()) ThrowInvalid("unknown vertex " + name.dump());
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  if (json.contains("edges")) {
    for (const Json& edge : json.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) ThrowInvalid("edge must be [src, dst]");
      edges.emplace_back(lookup(edge[0]), lookup(edge[1]));
    }
  }
  const Json& k = Field(json, "k");
  if (!k.is_number_integer()) ThrowInvalid("\"k\" must be an integer");
  return DvdInstance(std::move(names), std::move(edges), k.get<int>());
}

Json DvdToJson(const DvdInstance& dvd) {
  Json edges = Json::array();
  for (const auto& [v, w] : dvd.edges()) {
    edges.push_back(Json::array({dvd.vertices()[v], dvd.vertices()[w]}));
  }
  return Json{{"vertices", dvd.vertices()}, {"edges", std::move(edges)}, {"k", dvd.k()}};
}

Json ReadJsonFile(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) ThrowInvalid("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    ThrowInvalid("'" + path + "' is not valid JSON: " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& json) {
  const std::string text = json.dump(2) + "\n";
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) ThrowInvalid("cannot write '" + path + "'");
  out << text;
}

}  // namespace tct

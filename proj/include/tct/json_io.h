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

// JSON file formats.
//
//   instance   {"jobs":[{"id":s,"alternatives":[[delay,cost],...]}],
//               "edges":[[src,dst],...],"deadline":num}
//   solution   {"fast":[ids],"cost":num}
//   cover      {"x":{id:num},"objective":num,"quality":"exact"|"approx",
//               "eps":num}
//   dvd        {"vertices":[s,...],"edges":[[src,dst],...],"k":int}
//
// Numbers are JSON numbers or "p/q" strings; "inf" is INFINITE. Decimal
// JSON numbers are read as the shortest decimal that round-trips, so 0.1
// is exactly 1/10. Output writes integers as JSON integers and every other
// rational as a "p/q" string.

#ifndef TCT_JSON_IO_H_
#define TCT_JSON_IO_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "tct/dvd.h"
#include "tct/model.h"

namespace tct {

using Json = nlohmann::ordered_json;

Json RationalToJson(const Rational& value);
Json ExtendedToJson(const Extended& value);
Rational RationalFromJson(const Json& value);
Extended ExtendedFromJson(const Json& value);

TctInstance InstanceFromJson(const Json& json);
Json InstanceToJson(const TctInstance& instance);

// Requires every job to be of the form {(0,c),(t,0)}.
NormalizedInstance NormalizedFromJson(const Json& json);
inline Json NormalizedToJson(const NormalizedInstance& norm) {
  return InstanceToJson(norm.base());
}

// {id: {"original":s,"copy":i,"alternative":a}}; alternative is null for
// copy 0.
Json OriginMapToJson(const NormalizedInstance& norm);

Json SolutionToJson(const NormalizedInstance& norm, const AccelerationSet& sol);
// Reads "fast" and recomputes the cost. `declared_cost` receives the file's
// "cost" field when present.
AccelerationSet SolutionFromJson(const NormalizedInstance& norm, const Json& json,
                                 std::optional<Extended>* declared_cost = nullptr);

Json CoverToJson(const NormalizedInstance& norm, const FractionalCover& cover);
FractionalCover CoverFromJson(const NormalizedInstance& norm, const Json& json);

DvdInstance DvdFromJson(const Json& json);
Json DvdToJson(const DvdInstance& dvd);

// Throws TctError(kInvalidInput) on unreadable or malformed files.
Json ReadJsonFile(const std::string& path);
// Two-space indentation and a trailing newline; "-" writes to stdout.
void WriteJsonFile(const std::string& path, const Json& json);

}  // namespace tct

#endif  // TCT_JSON_IO_H_

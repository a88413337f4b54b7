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

#ifndef TCT_TOOLS_BENCH_H_
#define TCT_TOOLS_BENCH_H_

#include <cstdint>
#include <string>

#include "tct/json_io.h"

namespace tct::cli {

struct BenchOptions {
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  // Adds "wall_ms" to every row. Off by default so that reruns produce
  // byte-identical reports.
  bool timing = false;
};

// See README.md for the config and report schemas.
Json RunBench(const Json& config, const BenchOptions& options);

std::string BenchTable(const Json& report);

}  // namespace tct::cli

#endif  // TCT_TOOLS_BENCH_H_

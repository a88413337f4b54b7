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

#ifndef TCT_TOOLS_CLI_COMMON_H_
#define TCT_TOOLS_CLI_COMMON_H_

#include <optional>

#include "tct/json_io.h"
#include "tct/model.h"
#include "tct/normalize.h"

namespace tct::cli {

inline bool IsNormalizedShape(const TctInstance& instance) {
  for (const Job& job : instance.jobs()) {
    if (job.alternatives.size() != 2) return false;
    const Alternative& a = job.alternatives[0];
    const Alternative& b = job.alternatives[1];
    const bool ab = a.delay == Extended(0) && b.cost == Extended(0);
    const bool ba = b.delay == Extended(0) && a.cost == Extended(0);
    if (!ab && !ba) return false;
  }
  return true;
}

struct LoadedInstance {
  NormalizedInstance norm;
  // Set when the file held a general instance that was normalized here.
  std::optional<TctInstance> original;
};

// Instances already of the form {(0,c),(t,0)} are used as they are, so job
// ids in solutions match the file.
inline LoadedInstance LoadAsNormalized(const Json& json) {
  TctInstance instance = InstanceFromJson(json);
  LoadedInstance loaded;
  if (IsNormalizedShape(instance)) {
    loaded.norm = NormalizedInstance(std::move(instance));
  } else {
    loaded.norm = Normalize(instance);
    loaded.original = std::move(instance);
  }
  return loaded;
}

}  // namespace tct::cli

#endif  // TCT_TOOLS_CLI_COMMON_H_

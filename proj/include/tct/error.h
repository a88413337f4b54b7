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

#ifndef TCT_ERROR_H_
#define TCT_ERROR_H_

#include <stdexcept>
#include <string>

namespace tct {

enum class ErrorKind {
  kInvalidInput,  // malformed or contract-violating input
  kInfeasible,    // no finite-cost solution exists
  kResourceCap,   // enumeration or iteration cap exceeded
  kInternal,
};

class TctError : public std::runtime_error {
 public:
  TctError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& message) {
  throw TctError(ErrorKind::kInvalidInput, message);
}

}  // namespace tct

#endif  // TCT_ERROR_H_

// Copyright 2026 The Zonelab Authors.
//
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

#ifndef ZONELAB_ERROR_H_
#define ZONELAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonelab {

enum class ErrorCode {
  kDimension,      // mixed or unsupported dimensions
  kParameter,      // a numeric parameter outside its admissible range
  kDomain,         // an argument outside the operation's domain
  kNotSeparated,   // two sites (or a site and a region) touch
  kConstruction,   // an object could not be built from its parts
  kMonotonicity,   // the inner/outer sandwich broke beyond slack
  kParse,          // malformed configuration or input file
  kIo,             // file system failure
};

std::string_view ToString(ErrorCode code);

// All library failures are reported with this exception. The code lets
// callers (and tests) tell the failure classes apart without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zonelab

#endif  // ZONELAB_ERROR_H_

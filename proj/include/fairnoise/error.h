// Copyright 2026 The FairNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRNOISE_ERROR_H_
#define FAIRNOISE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairnoise {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyDataset,
  kEmptySlice,
  kInvalidNoise,
  kInvalidBaseRate,
  kDegenerateBaseRate,
  kDegenerateConditional,
  kNonPositiveEpsilon,
  kOutOfRangeRho,
  kOutOfRangeWeight,
  kParseError,
  kSchemaError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` distinguishes the
// failure class so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairnoise

#endif  // FAIRNOISE_ERROR_H_

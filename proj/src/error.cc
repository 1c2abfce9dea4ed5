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

#include "fairnoise/error.h"

#include <string>

namespace fairnoise {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kEmptyDataset:
      return "EmptyDataset";
    case ErrorCode::kEmptySlice:
      return "EmptySlice";
    case ErrorCode::kInvalidNoise:
      return "InvalidNoise";
    case ErrorCode::kInvalidBaseRate:
      return "InvalidBaseRate";
    case ErrorCode::kDegenerateBaseRate:
      return "DegenerateBaseRate";
    case ErrorCode::kDegenerateConditional:
      return "DegenerateConditional";
    case ErrorCode::kNonPositiveEpsilon:
      return "NonPositiveEpsilon";
    case ErrorCode::kOutOfRangeRho:
      return "OutOfRangeRho";
    case ErrorCode::kOutOfRangeWeight:
      return "OutOfRangeWeight";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kSchemaError:
      return "SchemaError";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace fairnoise

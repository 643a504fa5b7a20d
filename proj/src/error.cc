// Copyright 2026 The Authors.
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


#include "duke/error.h"

namespace duke {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "Io";
    case ErrorCode::kEmptyFile:
      return "EmptyFile";
    case ErrorCode::kRaggedRow:
      return "RaggedRow";
    case ErrorCode::kNonFinite:
      return "NonFinite";
    case ErrorCode::kBadFormat:
      return "BadFormat";
    case ErrorCode::kTooFewClasses:
      return "TooFewClasses";
    case ErrorCode::kInvalidProbabilities:
      return "InvalidProbabilities";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kZeroVectorCosine:
      return "ZeroVectorCosine";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kEmptyCenters:
      return "EmptyCenters";
    case ErrorCode::kBudgetExceedsGroundSet:
      return "BudgetExceedsGroundSet";
    case ErrorCode::kGraphMismatch:
      return "GraphMismatch";
    case ErrorCode::kTooManyWorkers:
      return "TooManyWorkers";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::uint64_t> detail)
    : std::runtime_error(message), code_(code), detail_(detail) {}

std::string Error::OneLine() const {
  std::string line = "error code=";
  line += ErrorCodeName(code_);
  if (detail_) line += " detail=" + std::to_string(*detail_);
  line += " message=\"";
  for (char c : std::string_view(what())) {
    if (c == '\n') {
      line += ' ';
    } else if (c == '"') {
      line += '\'';
    } else {
      line += c;
    }
  }
  line += '"';
  return line;
}

}  // namespace duke

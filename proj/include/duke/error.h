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

#ifndef DUKE_ERROR_H_
#define DUKE_ERROR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace duke {

enum class ErrorCode {
  kIo,
  kEmptyFile,
  kRaggedRow,
  kNonFinite,
  kBadFormat,
  kTooFewClasses,
  kInvalidProbabilities,
  kSizeMismatch,
  kZeroVectorCosine,
  kIndexOutOfRange,
  kEmptyCenters,
  kBudgetExceedsGroundSet,
  kGraphMismatch,
  kTooManyWorkers,
  kInstanceTooLarge,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception. `detail` carries the
// offending row / index / count when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::uint64_t> detail = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::uint64_t> detail() const { return detail_; }

  // Single-line form: `error code=<Name> [detail=<n>] message="..."`.
  std::string OneLine() const;

 private:
  ErrorCode code_;
  std::optional<std::uint64_t> detail_;
};

}  // namespace duke

#endif  // DUKE_ERROR_H_

// Copyright 2026 The mtss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtss {

enum class ErrorCode {
  kNotInvertible,
  kNonCoprimeModuli,
  kBadThreshold,
  kGenerationFailure,
  kInvalidSequence,
  kInvalidStructure,
  kUnknownParticipant,
  kSecretOutOfRange,
  kInsufficientShares,
  kInconsistentShares,
  kConditionViolated,
  kReconstructionOverflow,
  kStructureMismatch,
  kDeltaMissing,
  kAccessDenied,
  kGapInfeasible,
  kNoCandidates,
  kAttackTooLarge,
  kBadExponent,
  kNotMember,
  kMessageNotUnit,
  kCombinationFailure,
  kSearchTimeout,
  kInvalidSignature,
  kMalformedDocument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library surfaces as this exception type; the
// code is what the CLI maps to its machine-readable "error" field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mtss

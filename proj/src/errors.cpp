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

#include "mtss/errors.hpp"

namespace mtss {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::kBadThreshold: return "BadThreshold";
    case ErrorCode::kGenerationFailure: return "GenerationFailure";
    case ErrorCode::kInvalidSequence: return "InvalidSequence";
    case ErrorCode::kInvalidStructure: return "InvalidStructure";
    case ErrorCode::kUnknownParticipant: return "UnknownParticipant";
    case ErrorCode::kSecretOutOfRange: return "SecretOutOfRange";
    case ErrorCode::kInsufficientShares: return "InsufficientShares";
    case ErrorCode::kInconsistentShares: return "InconsistentShares";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kReconstructionOverflow: return "ReconstructionOverflow";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kDeltaMissing: return "DeltaMissing";
    case ErrorCode::kAccessDenied: return "AccessDenied";
    case ErrorCode::kGapInfeasible: return "GapInfeasible";
    case ErrorCode::kNoCandidates: return "NoCandidates";
    case ErrorCode::kAttackTooLarge: return "AttackTooLarge";
    case ErrorCode::kBadExponent: return "BadExponent";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kMessageNotUnit: return "MessageNotUnit";
    case ErrorCode::kCombinationFailure: return "CombinationFailure";
    case ErrorCode::kSearchTimeout: return "SearchTimeout";
    case ErrorCode::kInvalidSignature: return "InvalidSignature";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

}  // namespace mtss

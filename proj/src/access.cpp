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

#include "mtss/access.hpp"

#include <numeric>
#include <string>

#include "mtss/errors.hpp"

namespace mtss {

namespace {

std::vector<std::size_t> contiguous_assignment(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> out;
  for (std::size_t level = 0; level < sizes.size(); ++level) {
    out.insert(out.end(), sizes[level], level + 1);
  }
  return out;
}

}  // namespace

LevelStructure::LevelStructure(std::vector<std::size_t> sizes,
                               std::vector<std::size_t> thresholds)
    : sizes_(std::move(sizes)), thresholds_(std::move(thresholds)) {
  assignment_ = contiguous_assignment(sizes_);
  validate();
}

LevelStructure::LevelStructure(std::vector<std::size_t> sizes,
                               std::vector<std::size_t> thresholds,
                               std::vector<std::size_t> assignment)
    : sizes_(std::move(sizes)),
      thresholds_(std::move(thresholds)),
      assignment_(std::move(assignment)) {
  validate();
}

void LevelStructure::validate() const {
  if (sizes_.empty()) throw Error(ErrorCode::kInvalidStructure, "no levels");
  if (sizes_.size() != thresholds_.size()) {
    throw Error(ErrorCode::kInvalidStructure, "one threshold per level required");
  }
  std::size_t cumulative = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == 0) {
      throw Error(ErrorCode::kInvalidStructure, "level " + std::to_string(i + 1) + " is empty");
    }
    cumulative += sizes_[i];
    if (thresholds_[i] == 0 || (i > 0 && thresholds_[i] <= thresholds_[i - 1])) {
      throw Error(ErrorCode::kInvalidStructure, "thresholds must satisfy 0 < t_1 < ... < t_m");
    }
    if (thresholds_[i] > cumulative) {
      throw Error(ErrorCode::kInvalidStructure,
                  "t_" + std::to_string(i + 1) + " exceeds U_" + std::to_string(i + 1));
    }
  }
  if (assignment_.size() != cumulative) {
    throw Error(ErrorCode::kInvalidStructure, "assignment does not cover every participant");
  }
  std::vector<std::size_t> counts(sizes_.size(), 0);
  for (std::size_t level : assignment_) {
    if (level < 1 || level > sizes_.size()) {
      throw Error(ErrorCode::kInvalidStructure, "assignment names an unknown level");
    }
    ++counts[level - 1];
  }
  if (counts != sizes_) {
    throw Error(ErrorCode::kInvalidStructure, "assignment does not match level sizes");
  }
}

std::size_t LevelStructure::size(std::size_t level) const { return sizes_.at(level - 1); }

std::size_t LevelStructure::threshold(std::size_t level) const {
  return thresholds_.at(level - 1);
}

std::size_t LevelStructure::cumulative_size(std::size_t level) const {
  if (level < 1 || level > sizes_.size()) throw std::out_of_range("cumulative_size");
  return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(level),
                         std::size_t{0});
}

std::size_t LevelStructure::level_of(ParticipantId k) const {
  if (k < 1 || k > assignment_.size()) {
    throw Error(ErrorCode::kUnknownParticipant, "participant " + std::to_string(k));
  }
  return assignment_[k - 1];
}

std::vector<ParticipantId> LevelStructure::members(std::size_t level) const {
  std::vector<ParticipantId> out;
  for (std::size_t k = 1; k <= assignment_.size(); ++k) {
    if (assignment_[k - 1] == level) out.push_back(k);
  }
  return out;
}

void require_members(const Coalition& A, const LevelStructure& structure) {
  for (ParticipantId k : A) structure.level_of(k);
}

std::vector<ParticipantId> usable_members(const Coalition& A, const LevelStructure& structure,
                                          std::size_t level) {
  std::vector<ParticipantId> out;
  for (ParticipantId k : A) {
    if (structure.level_of(k) <= level) out.push_back(k);
  }
  return out;
}

std::optional<std::size_t> authorized_disjunctive(const Coalition& A,
                                                  const LevelStructure& structure) {
  require_members(A, structure);
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    if (usable_members(A, structure, i).size() >= structure.threshold(i)) return i;
  }
  return std::nullopt;
}

bool authorized_conjunctive(const Coalition& A, const LevelStructure& structure) {
  require_members(A, structure);
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    if (usable_members(A, structure, i).size() < structure.threshold(i)) return false;
  }
  return true;
}

}  // namespace mtss

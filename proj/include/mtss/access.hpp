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

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace mtss {

// Participants are numbered 1..n globally; levels 1..m, level 1 highest.
using ParticipantId = std::size_t;
using Coalition = std::set<ParticipantId>;

class LevelStructure {
 public:
  // Contiguous assignment: level 1 gets participants 1..n_1, level 2 the
  // next n_2, and so on.
  LevelStructure(std::vector<std::size_t> sizes, std::vector<std::size_t> thresholds);

  // assignment[k-1] is the level of participant k.
  LevelStructure(std::vector<std::size_t> sizes, std::vector<std::size_t> thresholds,
                 std::vector<std::size_t> assignment);

  std::size_t levels() const noexcept { return sizes_.size(); }
  std::size_t participants() const noexcept { return assignment_.size(); }
  std::size_t size(std::size_t level) const;
  std::size_t threshold(std::size_t level) const;
  // U_level = n_1 + ... + n_level.
  std::size_t cumulative_size(std::size_t level) const;
  std::size_t level_of(ParticipantId k) const;
  // Members of the given level, ascending.
  std::vector<ParticipantId> members(std::size_t level) const;

  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& thresholds() const noexcept { return thresholds_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  bool operator==(const LevelStructure&) const = default;

 private:
  void validate() const;

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> thresholds_;
  std::vector<std::size_t> assignment_;
};

// Throws kUnknownParticipant if A names someone outside 1..n.
void require_members(const Coalition& A, const LevelStructure& structure);

// Members of A whose level is <= level (A intersected with U_level), ascending.
std::vector<ParticipantId> usable_members(const Coalition& A, const LevelStructure& structure,
                                          std::size_t level);

// Smallest level i with |A n U_i| >= t_i, if any.
std::optional<std::size_t> authorized_disjunctive(const Coalition& A,
                                                  const LevelStructure& structure);

// |A n U_i| >= t_i for every level i.
bool authorized_conjunctive(const Coalition& A, const LevelStructure& structure);

}  // namespace mtss

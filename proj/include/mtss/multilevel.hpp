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
#include <span>
#include <vector>

#include "mtss/access.hpp"
#include "mtss/bigint.hpp"
#include "mtss/prime_sequence.hpp"

namespace mtss {

enum class MtssVariant { kDisjunctive, kConjunctive };

// Private share s^j_k = y_j mod p_k of participant k with home level j.
struct MtssShare {
  ParticipantId participant = 0;
  std::size_t level = 0;
  BigInt modulus;
  BigInt value;

  bool operator==(const MtssShare&) const = default;
};

// Broadcast value (y_level - h_k(s^j_k, level)) mod p_k, for levels below
// the participant's home level.
struct PublicDelta {
  ParticipantId participant = 0;
  std::size_t level = 0;
  BigInt value;

  bool operator==(const PublicDelta&) const = default;
};

struct PublicTranscript {
  MtssVariant variant = MtssVariant::kDisjunctive;
  LevelStructure structure;
  PrimeSequence sequence;
  std::vector<PublicDelta> deltas;  // ordered by (participant, level)

  bool operator==(const PublicTranscript&) const = default;
};

// Dealer-side values. Never serialized.
struct DealerSecrets {
  std::vector<BigInt> alphas;    // alpha_i per level
  std::vector<BigInt> blinded;   // y_i per level
  std::vector<BigInt> summands;  // sigma_i (conjunctive only)
};

struct DealerTranscript {
  PublicTranscript pub;
  std::vector<MtssShare> shares;  // index k-1 holds participant k
  DealerSecrets dealer;
};

// M_level = p_1 * ... * p_{t_level}.
BigInt level_bound(const LevelStructure& structure, const PrimeSequence& seq, std::size_t level);

const PublicDelta* find_delta(std::span<const PublicDelta> deltas, ParticipantId k,
                              std::size_t level);

// y_level mod p_k as usable by the share holder: the share itself at its home
// level, mask + delta below it. Throws kDeltaMissing when level is above the
// home level or no delta was published.
BigInt effective_residue(const MtssShare& share, std::size_t level,
                         std::span<const PublicDelta> deltas);

// Checks sizes, the secret range and the sequence conditions every deal
// depends on: the anchor inequality and the statistical inequality at each
// level threshold.
void validate_deal_inputs(const BigInt& secret, const LevelStructure& structure,
                          const PrimeSequence& seq);

// Shares and deltas for per-level blinded values y_1..y_m.
DealerTranscript share_blinded_values(MtssVariant variant, const LevelStructure& structure,
                                      const PrimeSequence& seq, std::vector<BigInt> blinded);

// Solves the congruences of the chosen members at `level` and checks the
// result against M_level. `members` must all have home level <= level.
BigInt solve_level(std::span<const ParticipantId> members, std::span<const MtssShare> shares,
                   const PublicTranscript& pub, std::size_t level);

// Looks up the share of each coalition member, validating it against the
// transcript. Throws kInsufficientShares when a member has none.
std::vector<MtssShare> shares_for(const Coalition& A, std::span<const MtssShare> shares,
                                  const PublicTranscript& pub);

}  // namespace mtss

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

#include "mtss/multilevel.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mtss/errors.hpp"
#include "mtss/mask.hpp"
#include "mtss/number_theory.hpp"

namespace mtss {

BigInt level_bound(const LevelStructure& structure, const PrimeSequence& seq,
                   std::size_t level) {
  return seq.smallest_product(structure.threshold(level));
}

const PublicDelta* find_delta(std::span<const PublicDelta> deltas, ParticipantId k,
                              std::size_t level) {
  auto it = std::find_if(deltas.begin(), deltas.end(), [&](const PublicDelta& d) {
    return d.participant == k && d.level == level;
  });
  return it == deltas.end() ? nullptr : &*it;
}

BigInt effective_residue(const MtssShare& share, std::size_t level,
                         std::span<const PublicDelta> deltas) {
  if (level == share.level) return share.value;
  const PublicDelta* delta =
      level > share.level ? find_delta(deltas, share.participant, level) : nullptr;
  if (delta == nullptr) {
    throw Error(ErrorCode::kDeltaMissing, "no public delta for participant " +
                                              std::to_string(share.participant) + " at level " +
                                              std::to_string(level));
  }
  return mod_floor(mask(share.participant, share.value, level, share.modulus) + delta->value,
                   share.modulus);
}

void validate_deal_inputs(const BigInt& secret, const LevelStructure& structure,
                          const PrimeSequence& seq) {
  if (seq.size() != structure.participants()) {
    throw Error(ErrorCode::kStructureMismatch,
                std::to_string(seq.size()) + " primes for " +
                    std::to_string(structure.participants()) + " participants");
  }
  if (secret < 0 || secret >= seq.p0()) {
    throw Error(ErrorCode::kSecretOutOfRange, "secret must lie in Z_p0");
  }
  if (!check_condition(seq, 0, ConditionKind::kAnchor)) {
    throw Error(ErrorCode::kConditionViolated, "sequence is not an anchor sequence");
  }
  for (std::size_t t : structure.thresholds()) {
    if (!check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical)) {
      throw Error(ErrorCode::kConditionViolated,
                  "statistical condition fails at threshold " + std::to_string(t));
    }
  }
}

DealerTranscript share_blinded_values(MtssVariant variant, const LevelStructure& structure,
                                      const PrimeSequence& seq, std::vector<BigInt> blinded) {
  DealerTranscript out{PublicTranscript{variant, structure, seq, {}}, {}, {}};
  const std::size_t m = structure.levels();
  for (ParticipantId k = 1; k <= structure.participants(); ++k) {
    const std::size_t home = structure.level_of(k);
    const BigInt& p = seq.modulus(k);
    MtssShare share{k, home, p, mod_floor(blinded[home - 1], p)};
    for (std::size_t i = home + 1; i <= m; ++i) {
      out.pub.deltas.push_back(
          {k, i, mod_floor(blinded[i - 1] - mask(k, share.value, i, p), p)});
    }
    out.shares.push_back(std::move(share));
  }
  out.dealer.blinded = std::move(blinded);
  return out;
}

std::vector<MtssShare> shares_for(const Coalition& A, std::span<const MtssShare> shares,
                                  const PublicTranscript& pub) {
  require_members(A, pub.structure);
  std::map<ParticipantId, const MtssShare*> by_participant;
  for (const MtssShare& share : shares) {
    if (!A.contains(share.participant)) continue;
    if (share.level != pub.structure.level_of(share.participant) ||
        share.modulus != pub.sequence.modulus(share.participant) || share.value < 0 ||
        share.value >= share.modulus) {
      throw Error(ErrorCode::kInconsistentShares,
                  "share of participant " + std::to_string(share.participant) +
                      " does not match the transcript");
    }
    by_participant.emplace(share.participant, &share);
  }
  std::vector<MtssShare> out;
  for (ParticipantId k : A) {
    auto it = by_participant.find(k);
    if (it == by_participant.end()) {
      throw Error(ErrorCode::kInsufficientShares,
                  "coalition member " + std::to_string(k) + " supplied no share");
    }
    out.push_back(*it->second);
  }
  return out;
}

BigInt solve_level(std::span<const ParticipantId> members, std::span<const MtssShare> shares,
                   const PublicTranscript& pub, std::size_t level) {
  std::vector<Congruence> system;
  for (ParticipantId k : members) {
    auto it = std::find_if(shares.begin(), shares.end(),
                           [&](const MtssShare& s) { return s.participant == k; });
    if (it == shares.end()) {
      throw Error(ErrorCode::kInsufficientShares, "missing share for " + std::to_string(k));
    }
    system.push_back({effective_residue(*it, level, pub.deltas), it->modulus});
  }
  const BigInt y = crt_solve(system);
  if (y >= level_bound(pub.structure, pub.sequence, level)) {
    throw Error(ErrorCode::kReconstructionOverflow,
                "level " + std::to_string(level) + " solution exceeds M_i");
  }
  return y;
}

}  // namespace mtss

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

#include "mtss/disjunctive.hpp"

#include <string>

#include "mtss/classic.hpp"
#include "mtss/errors.hpp"
#include "mtss/number_theory.hpp"

namespace mtss {

DealerTranscript deal_with_alphas(const BigInt& secret, const LevelStructure& structure,
                                  const PrimeSequence& seq, const std::vector<BigInt>& alphas) {
  validate_deal_inputs(secret, structure, seq);
  if (alphas.size() != structure.levels()) {
    throw Error(ErrorCode::kStructureMismatch, "one blinding factor per level required");
  }
  std::vector<BigInt> blinded;
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    const BigInt& alpha = alphas[i - 1];
    if (alpha < 0 || alpha > max_alpha(secret, seq.p0(), level_bound(structure, seq, i))) {
      throw Error(ErrorCode::kSecretOutOfRange,
                  "alpha_" + std::to_string(i) + " puts y_i outside [0, M_i)");
    }
    blinded.push_back(secret + alpha * seq.p0());
  }
  DealerTranscript out =
      share_blinded_values(MtssVariant::kDisjunctive, structure, seq, std::move(blinded));
  out.dealer.alphas = alphas;
  return out;
}

DealerTranscript deal(const BigInt& secret, const LevelStructure& structure,
                      const PrimeSequence& seq, Rng& rng) {
  validate_deal_inputs(secret, structure, seq);
  std::vector<BigInt> alphas;
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    alphas.push_back(
        rng.uniform_between(0, max_alpha(secret, seq.p0(), level_bound(structure, seq, i))));
  }
  return deal_with_alphas(secret, structure, seq, alphas);
}

BigInt reconstruct(const Coalition& A, std::span<const MtssShare> shares,
                   const PublicTranscript& pub) {
  const std::vector<MtssShare> held = shares_for(A, shares, pub);
  const auto level = authorized_disjunctive(A, pub.structure);
  if (!level) throw Error(ErrorCode::kAccessDenied, "coalition meets no level threshold");

  std::vector<ParticipantId> chosen = usable_members(A, pub.structure, *level);
  chosen.resize(pub.structure.threshold(*level));
  return mod_floor(solve_level(chosen, held, pub, *level), pub.sequence.p0());
}

}  // namespace mtss

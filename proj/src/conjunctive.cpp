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

#include "mtss/conjunctive.hpp"

#include "mtss/classic.hpp"
#include "mtss/errors.hpp"
#include "mtss/number_theory.hpp"

namespace mtss {

DealerTranscript deal_conjunctive(const BigInt& secret, const LevelStructure& structure,
                                  const PrimeSequence& seq, Rng& rng) {
  validate_deal_inputs(secret, structure, seq);
  const BigInt& p0 = seq.p0();
  const std::size_t m = structure.levels();

  std::vector<BigInt> summands;
  BigInt partial = 0;
  for (std::size_t i = 1; i < m; ++i) {
    summands.push_back(rng.uniform_below(p0));
    partial += summands.back();
  }
  summands.push_back(mod_floor(secret - partial, p0));

  std::vector<BigInt> alphas;
  std::vector<BigInt> blinded;
  for (std::size_t i = 1; i <= m; ++i) {
    const BigInt& sigma = summands[i - 1];
    alphas.push_back(
        rng.uniform_between(0, max_alpha(sigma, p0, level_bound(structure, seq, i))));
    blinded.push_back(sigma + alphas.back() * p0);
  }

  DealerTranscript out =
      share_blinded_values(MtssVariant::kConjunctive, structure, seq, std::move(blinded));
  out.dealer.alphas = std::move(alphas);
  out.dealer.summands = std::move(summands);
  return out;
}

BigInt reconstruct_conjunctive(const Coalition& A, std::span<const MtssShare> shares,
                               const PublicTranscript& pub) {
  const std::vector<MtssShare> held = shares_for(A, shares, pub);
  if (!authorized_conjunctive(A, pub.structure)) {
    throw Error(ErrorCode::kAccessDenied, "coalition misses at least one level threshold");
  }
  const BigInt& p0 = pub.sequence.p0();
  BigInt sum = 0;
  for (std::size_t i = 1; i <= pub.structure.levels(); ++i) {
    std::vector<ParticipantId> chosen = usable_members(A, pub.structure, i);
    chosen.resize(pub.structure.threshold(i));
    sum += mod_floor(solve_level(chosen, held, pub, i), p0);
  }
  return mod_floor(sum, p0);
}

}  // namespace mtss

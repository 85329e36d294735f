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

#include "mtss/classic.hpp"

#include <set>
#include <string>

#include "mtss/errors.hpp"
#include "mtss/number_theory.hpp"

namespace mtss {

namespace {

void require_threshold(const PrimeSequence& seq, std::size_t t) {
  if (t < 1 || t > seq.size()) {
    throw Error(ErrorCode::kBadThreshold,
                "threshold " + std::to_string(t) + " outside [1, " + std::to_string(seq.size()) +
                    "]");
  }
}

std::vector<ClassicShare> reduce_all(const BigInt& value, const PrimeSequence& seq) {
  std::vector<ClassicShare> shares;
  shares.reserve(seq.size());
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    shares.push_back({k, seq.modulus(k), mod_floor(value, seq.modulus(k))});
  }
  return shares;
}

// Congruences for a share set, checking count and that each modulus is the
// one the sequence assigns to that participant.
std::vector<Congruence> collect(std::span<const ClassicShare> shares, const PrimeSequence& seq,
                                std::size_t t) {
  std::set<ParticipantId> seen;
  std::vector<Congruence> system;
  for (const ClassicShare& share : shares) {
    if (seq.modulus(share.participant) != share.modulus) {
      throw Error(ErrorCode::kInconsistentShares,
                  "share of participant " + std::to_string(share.participant) +
                      " carries a foreign modulus");
    }
    if (!seen.insert(share.participant).second) continue;
    system.push_back({share.value, share.modulus});
  }
  if (system.size() < t) {
    throw Error(ErrorCode::kInsufficientShares,
                std::to_string(system.size()) + " distinct shares, threshold " +
                    std::to_string(t));
  }
  return system;
}

}  // namespace

std::vector<ClassicShare> mignotte_share(const BigInt& secret, const PrimeSequence& seq,
                                         std::size_t t) {
  require_threshold(seq, t);
  const BigInt lower = seq.largest_product(t - 1);
  const BigInt upper = seq.smallest_product(t);
  if (!(lower < secret && secret < upper)) {
    throw Error(ErrorCode::kSecretOutOfRange,
                "secret must lie in (" + to_decimal(lower) + ", " + to_decimal(upper) + ")");
  }
  return reduce_all(secret, seq);
}

BigInt mignotte_reconstruct(std::span<const ClassicShare> shares, const PrimeSequence& seq,
                            std::size_t t) {
  require_threshold(seq, t);
  const std::vector<Congruence> system = collect(shares, seq, t);
  const BigInt secret = crt_solve(system);
  if (!(seq.largest_product(t - 1) < secret && secret < seq.smallest_product(t))) {
    throw Error(ErrorCode::kInconsistentShares, "solution outside the Mignotte interval");
  }
  return secret;
}

BigInt max_alpha(const BigInt& secret, const BigInt& p0, const BigInt& bound) {
  BigInt out;
  const BigInt numerator = bound - 1 - secret;
  mpz_fdiv_q(out.get_mpz_t(), numerator.get_mpz_t(), p0.get_mpz_t());
  return out;
}

AsmuthBloomSharing ab_share_with_alpha(const BigInt& secret, const PrimeSequence& seq,
                                       std::size_t t, const BigInt& alpha) {
  require_threshold(seq, t);
  if (secret < 0 || secret >= seq.p0()) {
    throw Error(ErrorCode::kSecretOutOfRange, "secret must lie in Z_p0");
  }
  if (!check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical)) {
    throw Error(ErrorCode::kConditionViolated,
                "p0^2 * p_{n-t+2}...p_n < p_1...p_t does not hold for t = " + std::to_string(t));
  }
  const BigInt bound = seq.smallest_product(t);
  if (alpha < 0 || alpha > max_alpha(secret, seq.p0(), bound)) {
    throw Error(ErrorCode::kSecretOutOfRange, "blinding factor outside the legal range");
  }
  BlindedSecret blinded{secret + alpha * seq.p0(), alpha, bound};
  return {reduce_all(blinded.y, seq), std::move(blinded)};
}

AsmuthBloomSharing ab_share(const BigInt& secret, const PrimeSequence& seq, std::size_t t,
                            Rng& rng) {
  require_threshold(seq, t);
  if (secret < 0 || secret >= seq.p0()) {
    throw Error(ErrorCode::kSecretOutOfRange, "secret must lie in Z_p0");
  }
  if (!check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical)) {
    throw Error(ErrorCode::kConditionViolated,
                "p0^2 * p_{n-t+2}...p_n < p_1...p_t does not hold for t = " + std::to_string(t));
  }
  const BigInt alpha =
      rng.uniform_between(0, max_alpha(secret, seq.p0(), seq.smallest_product(t)));
  return ab_share_with_alpha(secret, seq, t, alpha);
}

BigInt ab_reconstruct(std::span<const ClassicShare> shares, const PrimeSequence& seq,
                      std::size_t t) {
  require_threshold(seq, t);
  const std::vector<Congruence> system = collect(shares, seq, t);
  const BigInt y = crt_solve(system);
  if (y >= seq.smallest_product(t)) {
    throw Error(ErrorCode::kReconstructionOverflow,
                "solution is not below p_1...p_t; shares are corrupted");
  }
  return mod_floor(y, seq.p0());
}

}  // namespace mtss

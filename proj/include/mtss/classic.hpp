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

struct ClassicShare {
  ParticipantId participant = 0;
  BigInt modulus;
  BigInt value;  // in [0, modulus)

  bool operator==(const ClassicShare&) const = default;
};

// Dealer-only view of an Asmuth-Bloom sharing: y = s + alpha * p0 < bound.
struct BlindedSecret {
  BigInt y;
  BigInt alpha;
  BigInt bound;
};

struct AsmuthBloomSharing {
  std::vector<ClassicShare> shares;
  BlindedSecret blinded;
};

// Mignotte (t, n). p0 of the sequence is ignored. The secret must lie
// strictly inside (p_{n-t+2}...p_n, p_1...p_t); throws kSecretOutOfRange.
std::vector<ClassicShare> mignotte_share(const BigInt& secret, const PrimeSequence& seq,
                                         std::size_t t);

// Throws kInsufficientShares below t shares and kInconsistentShares when the
// CRT solution falls outside the Mignotte interval.
BigInt mignotte_reconstruct(std::span<const ClassicShare> shares, const PrimeSequence& seq,
                            std::size_t t);

// Asmuth-Bloom with the statistical (p0^2) condition. alpha is uniform over
// [0, floor((M - 1 - s) / p0)], M = p_1...p_t.
AsmuthBloomSharing ab_share(const BigInt& secret, const PrimeSequence& seq, std::size_t t,
                            Rng& rng);

// Same as ab_share with a caller-chosen blinding factor.
AsmuthBloomSharing ab_share_with_alpha(const BigInt& secret, const PrimeSequence& seq,
                                       std::size_t t, const BigInt& alpha);

// Largest legal blinding factor floor((bound - 1 - s) / p0).
BigInt max_alpha(const BigInt& secret, const BigInt& p0, const BigInt& bound);

// Solves over every supplied share; throws kReconstructionOverflow when the
// solution is not below p_1...p_t.
BigInt ab_reconstruct(std::span<const ClassicShare> shares, const PrimeSequence& seq,
                      std::size_t t);

}  // namespace mtss

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
#include <string>
#include <vector>

#include "mtss/access.hpp"
#include "mtss/bigint.hpp"
#include "mtss/multilevel.hpp"

namespace mtss::rsa {

struct GroupKey {
  BigInt n;
  BigInt e;

  bool operator==(const GroupKey&) const = default;
};

// Everything the dealer publishes or hands out. The secret exponent, phi(N),
// p', q' and the blinded values are gone once setup returns; the moduli list
// is the anchor sequence without its p0 (= phi(N)).
struct Setup {
  GroupKey key;
  LevelStructure structure;
  std::vector<BigInt> moduli;
  std::vector<MtssShare> shares;  // private, one per participant
  std::vector<PublicDelta> deltas;
};

// Safe prime 2q' + 1 of exactly `bits` bits with q' prime. Throws
// kSearchTimeout after `max_attempts` candidates.
struct SafePrime {
  BigInt p;        // 2 * q' + 1
  BigInt sophie;   // q'
};
SafePrime generate_safe_prime(unsigned bits, Rng& rng, std::size_t max_attempts = 2'000'000);

// N = (2p'+1)(2q'+1); d = e^-1 mod 4p'q' is shared with the disjunctive
// scheme over an anchor sequence for p0 = 4p'q'.
Setup setup_from_primes(const BigInt& p_prime, const BigInt& q_prime, const BigInt& e,
                        const LevelStructure& structure, Rng& rng);

// Generates p', q' for an N of `modulus_bits` bits (at most 512).
Setup setup(unsigned modulus_bits, const BigInt& e, const LevelStructure& structure, Rng& rng);

struct CoalitionMember {
  ParticipantId participant = 0;
  BigInt modulus;   // p_k
  BigInt cofactor;  // M_A / p_k
  BigInt inverse;   // (M_A / p_k)^-1 mod p_k

  bool operator==(const CoalitionMember&) const = default;
};

class CoalitionContext {
 public:
  // The first t_level members of A usable at `level`, ascending. Throws
  // kAccessDenied if A has fewer than t_level of them.
  static CoalitionContext make(const Coalition& A, const LevelStructure& structure,
                               std::span<const BigInt> moduli, std::size_t level);

  // Smallest level A satisfies (kAccessDenied if none).
  static CoalitionContext make(const Coalition& A, const LevelStructure& structure,
                               std::span<const BigInt> moduli);

  // Exactly the given members at `level`, without the threshold check. Only
  // useful for demonstrating that deficient coalitions fail to sign.
  static CoalitionContext unchecked(std::span<const ParticipantId> members,
                                    const LevelStructure& structure,
                                    std::span<const BigInt> moduli, std::size_t level);

  std::size_t level() const noexcept { return level_; }
  const std::vector<CoalitionMember>& members() const noexcept { return members_; }
  const BigInt& modulus_product() const noexcept { return modulus_product_; }
  // "level=<i>;members=<k1>,<k2>,..."
  std::string id() const;
  const CoalitionMember* find(ParticipantId k) const;

  // P_k * I_k * residue mod M_A.
  BigInt exponent(ParticipantId k, const BigInt& residue) const;

 private:
  std::size_t level_ = 0;
  std::vector<CoalitionMember> members_;
  BigInt modulus_product_;
};

struct PartialSignature {
  ParticipantId participant = 0;
  BigInt value;
  std::string context;

  bool operator==(const PartialSignature&) const = default;
};

// Signer side. A home-level member exponentiates with its share; a member of
// a higher level uses h_k(share, level), whose complement the server supplies
// from the public delta. Throws kNotMember and kMessageNotUnit.
PartialSignature partial_sign(const BigInt& msg, const MtssShare& share,
                              const CoalitionContext& ctx, const GroupKey& key);

// Server side, from public data only. Home-level members contribute msg^0.
PartialSignature public_part(const BigInt& msg, ParticipantId k, const LevelStructure& structure,
                             std::span<const PublicDelta> deltas, const CoalitionContext& ctx,
                             const GroupKey& key);

struct Signature {
  BigInt value;
  unsigned correction = 0;  // delta: number of kappa factors applied
};

// Multiplies all parts and searches x in [0, 2 * |members|) for the
// kappa^x = (msg^{M_A})^{-x} correction that verifies. Throws
// kCombinationFailure when none does.
Signature combine(std::span<const PartialSignature> partials,
                  std::span<const PartialSignature> public_parts, const BigInt& msg,
                  const CoalitionContext& ctx, const GroupKey& key);

bool verify(const BigInt& msg, const BigInt& signature, const GroupKey& key);

}  // namespace mtss::rsa

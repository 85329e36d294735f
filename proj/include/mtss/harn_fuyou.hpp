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
#include "mtss/number_theory.hpp"

// Reproduction of the Harn-Fuyou multilevel scheme, its U_i-prime fix, and
// the public-information attack that breaks both.
namespace mtss::hf {

enum class Variant { kOriginal, kFixed };

struct Level {
  // Original: the n_i member primes. Fixed: U_i primes, the first n_i of
  // which belong to the level's members.
  std::vector<BigInt> primes;
  BigInt lower;  // largest t_i - 1 primes multiplied (t-threshold lower bound)
  BigInt upper;  // smallest t_i primes multiplied

  bool operator==(const Level&) const = default;
};

// Public parameters.
struct Parameters {
  Variant variant = Variant::kOriginal;
  BigInt p0;
  LevelStructure structure;
  std::vector<Level> levels;

  // Modulus of participant k's private share.
  const BigInt& share_modulus(ParticipantId k) const;

  bool operator==(const Parameters&) const = default;
};

struct Share {
  ParticipantId participant = 0;
  std::size_t level = 0;
  BigInt modulus;
  BigInt value;

  bool operator==(const Share&) const = default;
};

// (y_target - s_k) mod modulus, broadcast with the modulus.
struct PublicEntry {
  ParticipantId participant = 0;
  std::size_t target_level = 0;
  BigInt delta;
  BigInt modulus;

  bool operator==(const PublicEntry&) const = default;
};

struct DealerSecrets {
  std::vector<BigInt> alphas;
  std::vector<BigInt> blinded;
};

struct Deal {
  Parameters params;
  std::vector<Share> shares;  // index k-1 holds participant k
  std::vector<PublicEntry> public_info;
  DealerSecrets dealer;
};

// Exact inputs for reproducing a fixed transcript.
struct ForcedParameters {
  BigInt p0;
  BigInt secret;
  std::vector<std::vector<BigInt>> level_primes;
  std::vector<BigInt> alphas;
};

// Two levels, sizes (4, 2), thresholds (2, 3).
LevelStructure example2_structure();
// p0 = 5, s = 1, level primes (11, 13, 17, 23) and (29, 31, 37, 61, 67, 71),
// alpha = (5, 952).
ForcedParameters example2_parameters();

// Per-level sequences of n_i primes plus one cross-level prime p^i_{k,j}
// strictly between p^j_{t_j} and p^j_{n_j - t_j + 2} for every higher-level
// participant. Throws kBadThreshold when some t_i > n_i and kGapInfeasible
// when that open interval cannot exist.
Deal deal_original(const BigInt& secret, const BigInt& p0, const LevelStructure& structure,
                   Rng& rng);

// Per-level sequences of U_i primes; extras serve higher-level participants.
Deal deal_fixed(const BigInt& secret, const BigInt& p0, const LevelStructure& structure,
                Rng& rng);

// Fixed variant with every prime and blinding factor supplied. Throws
// kConditionViolated if the per-level inequality or t-threshold range fails.
Deal deal_fixed_forced(const LevelStructure& structure, const ForcedParameters& forced);

// CRT over every usable share at `level` (direct shares of that level and
// delta-adjusted shares of higher levels); returns y mod p0.
BigInt reconstruct(const Parameters& params, std::span<const Share> shares,
                   std::span<const PublicEntry> public_info, std::size_t level);

// --- attack ---------------------------------------------------------------

struct AttackTarget {
  ParticipantId participant = 0;
  BigInt delta;
  BigInt public_modulus;
  BigInt share_modulus;  // private share lives in [0, share_modulus)
};

struct AttackInput {
  std::vector<Congruence> corrupted;  // y modulo the corrupted moduli
  std::vector<AttackTarget> targets;
  BigInt lower;  // y > lower
  BigInt upper;  // y < upper
  BigInt p0;
};

// Inclusive residue interval modulo a target's public modulus.
struct ResidueInterval {
  BigInt lo;
  BigInt hi;

  bool operator==(const ResidueInterval&) const = default;
};

struct CandidateRow {
  BigInt candidate;
  std::vector<BigInt> implied;  // candidate mod each target's public modulus
  std::vector<bool> in_range;
  bool feasible = false;
  BigInt secret;
};

struct AttackReport {
  BigInt base;  // candidates are base + step * K, k_min <= K <= k_max
  BigInt step;
  BigInt k_min;
  BigInt k_max;
  std::vector<std::vector<ResidueInterval>> intervals;  // per target
  std::vector<CandidateRow> rows;                       // ascending candidate
  std::vector<BigInt> survivors;
  std::vector<BigInt> secrets;  // distinct survivor secrets, ascending
};

// Feasible implied residues of one uncorrupted participant, split at the
// wrap-around of the public modulus.
std::vector<ResidueInterval> feasible_intervals(const AttackTarget& target);

// Collects the adversary's view at `level`: every corrupted share usable at
// that level, and public data of every uncorrupted higher-level participant.
AttackInput attack_input(const Parameters& params, std::span<const Share> corrupted,
                         std::span<const PublicEntry> public_info, std::size_t level);

// Enumerates every y candidate in the t-threshold range consistent with the
// corrupted shares and filters by the targets' feasible intervals. Throws
// kNoCandidates on an empty range and kAttackTooLarge beyond max_candidates.
AttackReport attack(const AttackInput& input, std::size_t max_candidates = std::size_t{1} << 22);

// Aligned text table: candidate, implied residues (in-range ones marked *),
// survivor flag.
std::string render_table(const AttackReport& report, const AttackInput& input);

}  // namespace mtss::hf

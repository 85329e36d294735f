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
#include <span>
#include <string_view>
#include <vector>

#include "mtss/bigint.hpp"

namespace mtss {

// Which product inequality a sequence is checked (or was validated) against.
enum class ConditionKind {
  kMignotte,                // p_{n-t+2}...p_n < p_1...p_t
  kAsmuthBloomClassic,      // p0 * p_{n-t+2}...p_n < p_1...p_t
  kAsmuthBloomStatistical,  // p0^2 * p_{n-t+2}...p_n < p_1...p_t
  kAnchor,                  // statistical form at t = floor(n/2)
};

std::string_view to_string(ConditionKind kind) noexcept;
std::optional<ConditionKind> condition_kind_from_string(std::string_view name) noexcept;

struct SequenceKind {
  ConditionKind condition = ConditionKind::kAnchor;
  std::size_t threshold = 0;  // unused for kAnchor

  bool operator==(const SequenceKind&) const = default;
};

// p0 < p_1 < ... < p_n, all pairwise coprime. Participant k (1-based) owns
// p_k. Construction validates the ordering and coprimality invariants.
class PrimeSequence {
 public:
  PrimeSequence(BigInt p0, std::vector<BigInt> primes,
                std::optional<SequenceKind> kind = std::nullopt);

  const BigInt& p0() const noexcept { return p0_; }
  std::span<const BigInt> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  // 1-based, matching participant indices.
  const BigInt& modulus(std::size_t k) const;

  // p_1 * ... * p_count.
  BigInt smallest_product(std::size_t count) const;
  // p_{n-count+1} * ... * p_n.
  BigInt largest_product(std::size_t count) const;

  const std::optional<SequenceKind>& kind() const noexcept { return kind_; }

  bool operator==(const PrimeSequence&) const = default;

 private:
  BigInt p0_;
  std::vector<BigInt> primes_;
  std::optional<SequenceKind> kind_;
};

// Threshold used by the anchor inequality: max(1, floor(n/2)).
std::size_t anchor_threshold(std::size_t n) noexcept;

// Exact evaluation of the requested inequality. `t` is ignored for kAnchor.
// Throws kBadThreshold when t is outside [1, n].
bool check_condition(const PrimeSequence& seq, std::size_t t, ConditionKind kind);

// Both sides of the inequality, for reporting (lhs < rhs means it holds).
struct ConditionSides {
  BigInt lhs;
  BigInt rhs;
};
ConditionSides condition_sides(const PrimeSequence& seq, std::size_t t,
                               ConditionKind kind);

// Anchor sequence of n primes for secret modulus p0 (any integer > 1). Takes
// consecutive primes from the first prime >= 2*p0^2, doubling the start
// bound on failure (at most 16 rounds). The result satisfies the anchor
// inequality and the statistical inequality for every t in [1, n].
PrimeSequence generate_anchor_sequence(const BigInt& p0, std::size_t n);

// Sequence of `count` primes above p0 satisfying the classic inequality at
// threshold t, as used by the audited Harn-Fuyou scheme. The start point is
// B + uniform[0, 2*p0) with B = max(2*p0, floor), so seeds vary the output.
PrimeSequence generate_hf_sequence(const BigInt& p0, std::size_t count, std::size_t t,
                                   Rng& rng, const BigInt& floor = 0);

// `count` consecutive primes starting at the first prime >= start.
std::vector<BigInt> consecutive_primes(const BigInt& start, std::size_t count);

}  // namespace mtss

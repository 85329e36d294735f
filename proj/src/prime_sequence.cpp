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

#include "mtss/prime_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mtss/errors.hpp"
#include "mtss/number_theory.hpp"

namespace mtss {

namespace {

constexpr int kMaxEscalations = 16;

}  // namespace

std::string_view to_string(ConditionKind kind) noexcept {
  switch (kind) {
    case ConditionKind::kMignotte: return "mignotte";
    case ConditionKind::kAsmuthBloomClassic: return "classic";
    case ConditionKind::kAsmuthBloomStatistical: return "statistical";
    case ConditionKind::kAnchor: return "anchor";
  }
  return "unknown";
}

std::optional<ConditionKind> condition_kind_from_string(std::string_view name) noexcept {
  if (name == "mignotte") return ConditionKind::kMignotte;
  if (name == "classic") return ConditionKind::kAsmuthBloomClassic;
  if (name == "statistical") return ConditionKind::kAsmuthBloomStatistical;
  if (name == "anchor") return ConditionKind::kAnchor;
  return std::nullopt;
}

PrimeSequence::PrimeSequence(BigInt p0, std::vector<BigInt> primes,
                             std::optional<SequenceKind> kind)
    : p0_(std::move(p0)), primes_(std::move(primes)), kind_(kind) {
  if (p0_ < 1) throw Error(ErrorCode::kInvalidSequence, "p0 must be positive");
  if (primes_.empty()) throw Error(ErrorCode::kInvalidSequence, "no primes");
  if (!(p0_ < primes_.front())) {
    throw Error(ErrorCode::kInvalidSequence, "p0 must be below p_1");
  }
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    if (k > 0 && !(primes_[k - 1] < primes_[k])) {
      throw Error(ErrorCode::kInvalidSequence, "primes must be strictly increasing");
    }
    if (gcd(p0_, primes_[k]) != 1) {
      throw Error(ErrorCode::kInvalidSequence,
                  "p0 shares a factor with " + to_decimal(primes_[k]));
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (gcd(primes_[l], primes_[k]) != 1) {
        throw Error(ErrorCode::kInvalidSequence,
                    to_decimal(primes_[l]) + " and " + to_decimal(primes_[k]) +
                        " are not coprime");
      }
    }
  }
}

const BigInt& PrimeSequence::modulus(std::size_t k) const {
  if (k < 1 || k > primes_.size()) {
    throw Error(ErrorCode::kUnknownParticipant, "no modulus for participant " +
                                                    std::to_string(k));
  }
  return primes_[k - 1];
}

BigInt PrimeSequence::smallest_product(std::size_t count) const {
  if (count > primes_.size()) throw std::out_of_range("smallest_product");
  return product(std::span<const BigInt>(primes_).first(count));
}

BigInt PrimeSequence::largest_product(std::size_t count) const {
  if (count > primes_.size()) throw std::out_of_range("largest_product");
  return product(std::span<const BigInt>(primes_).last(count));
}

std::size_t anchor_threshold(std::size_t n) noexcept { return std::max<std::size_t>(1, n / 2); }

ConditionSides condition_sides(const PrimeSequence& seq, std::size_t t,
                               ConditionKind kind) {
  const std::size_t n = seq.size();
  if (kind == ConditionKind::kAnchor) {
    t = anchor_threshold(n);
  } else if (t < 1 || t > n) {
    throw Error(ErrorCode::kBadThreshold,
                "threshold " + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
  }
  ConditionSides sides{seq.largest_product(t - 1), seq.smallest_product(t)};
  switch (kind) {
    case ConditionKind::kMignotte:
      break;
    case ConditionKind::kAsmuthBloomClassic:
      sides.lhs *= seq.p0();
      break;
    case ConditionKind::kAsmuthBloomStatistical:
    case ConditionKind::kAnchor:
      sides.lhs *= seq.p0() * seq.p0();
      break;
  }
  return sides;
}

bool check_condition(const PrimeSequence& seq, std::size_t t, ConditionKind kind) {
  const ConditionSides sides = condition_sides(seq, t, kind);
  return sides.lhs < sides.rhs;
}

std::vector<BigInt> consecutive_primes(const BigInt& start, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt next = start;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(next_prime(next));
    next = out.back() + 1;
  }
  return out;
}

PrimeSequence generate_anchor_sequence(const BigInt& p0, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kBadThreshold, "anchor sequence needs n >= 1");
  if (p0 < 2) throw Error(ErrorCode::kInvalidSequence, "p0 must exceed 1");

  BigInt start = 2 * p0 * p0;
  for (int round = 0; round < kMaxEscalations; ++round, start *= 2) {
    std::vector<BigInt> primes = consecutive_primes(start, n);
    bool coprime = true;
    for (const BigInt& p : primes) coprime = coprime && gcd(p, p0) == 1;
    if (!coprime) continue;

    PrimeSequence seq(p0, std::move(primes),
                      SequenceKind{ConditionKind::kAnchor, anchor_threshold(n)});
    if (!check_condition(seq, 0, ConditionKind::kAnchor)) continue;
    // The anchor inequality alone does not cover every t for odd n, so the
    // whole statistical sweep is part of acceptance.
    bool all_thresholds = true;
    for (std::size_t t = 1; t <= n && all_thresholds; ++t) {
      all_thresholds = check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical);
    }
    if (all_thresholds) return seq;
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no anchor sequence found after " + std::to_string(kMaxEscalations) +
                  " escalations");
}

PrimeSequence generate_hf_sequence(const BigInt& p0, std::size_t count, std::size_t t,
                                   Rng& rng, const BigInt& floor) {
  if (t < 1 || t > count) {
    throw Error(ErrorCode::kBadThreshold,
                "no (" + std::to_string(t) + "," + std::to_string(count) +
                    ")-Asmuth-Bloom sequence exists");
  }
  BigInt start = std::max(BigInt(2 * p0), BigInt(floor));
  start += rng.uniform_below(2 * p0);
  for (int round = 0; round < kMaxEscalations; ++round, start *= 2) {
    std::vector<BigInt> primes = consecutive_primes(start, count);
    bool coprime = true;
    for (const BigInt& p : primes) coprime = coprime && gcd(p, p0) == 1;
    if (!coprime) continue;
    PrimeSequence seq(p0, std::move(primes),
                      SequenceKind{ConditionKind::kAsmuthBloomClassic, t});
    if (check_condition(seq, t, ConditionKind::kAsmuthBloomClassic)) return seq;
  }
  throw Error(ErrorCode::kGenerationFailure, "no Harn-Fuyou sequence found");
}

}  // namespace mtss

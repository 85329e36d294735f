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

#include <gtest/gtest.h>

#include <vector>

#include "expect_error.hpp"
#include "mtss/number_theory.hpp"
#include "mtss/prime_sequence.hpp"
#include "oracles.hpp"

namespace mtss {
namespace {

std::vector<BigInt> to_vector(std::span<const BigInt> s) { return {s.begin(), s.end()}; }

void expect_full_sweep(const PrimeSequence& seq) {
  const auto primes = to_vector(seq.primes());
  for (std::size_t t = 1; t <= primes.size(); ++t) {
    EXPECT_TRUE(oracle::statistical_holds(seq.p0(), primes, t)) << "t=" << t;
  }
}

TEST(PrimeSequence, RejectsMalformedInput) {
  EXPECT_MTSS_ERROR(PrimeSequence(5, {}), ErrorCode::kInvalidSequence);
  EXPECT_MTSS_ERROR(PrimeSequence(5, {13, 11}), ErrorCode::kInvalidSequence);
  EXPECT_MTSS_ERROR(PrimeSequence(5, {11, 11}), ErrorCode::kInvalidSequence);
  EXPECT_MTSS_ERROR(PrimeSequence(13, {11, 17}), ErrorCode::kInvalidSequence);
  EXPECT_MTSS_ERROR(PrimeSequence(3, {9, 15}), ErrorCode::kInvalidSequence);
  EXPECT_MTSS_ERROR(PrimeSequence(0, {11}), ErrorCode::kInvalidSequence);
}

TEST(PrimeSequence, AccessorsAndProducts) {
  const PrimeSequence seq(5, {11, 13, 17, 23});
  EXPECT_EQ(seq.modulus(1), 11);
  EXPECT_EQ(seq.modulus(4), 23);
  EXPECT_MTSS_ERROR(seq.modulus(0), ErrorCode::kUnknownParticipant);
  EXPECT_MTSS_ERROR(seq.modulus(5), ErrorCode::kUnknownParticipant);
  EXPECT_EQ(seq.smallest_product(2), 143);
  EXPECT_EQ(seq.largest_product(1), 23);
  EXPECT_EQ(seq.largest_product(0), 1);
}

TEST(CheckCondition, AnchorDirectProducts) {
  const PrimeSequence seq(3, {19, 23, 29, 31});
  EXPECT_TRUE(check_condition(seq, 0, ConditionKind::kAnchor));
  const ConditionSides sides = condition_sides(seq, 0, ConditionKind::kAnchor);
  EXPECT_EQ(sides.lhs, 279);
  EXPECT_EQ(sides.rhs, 437);
}

TEST(CheckCondition, ClassicHoldsStatisticalFailsOnLevelOnePrimes) {
  const PrimeSequence seq(5, {11, 13, 17, 23});
  const ConditionSides classic = condition_sides(seq, 2, ConditionKind::kAsmuthBloomClassic);
  EXPECT_EQ(classic.lhs, 115);
  EXPECT_EQ(classic.rhs, 143);
  EXPECT_TRUE(check_condition(seq, 2, ConditionKind::kAsmuthBloomClassic));
  EXPECT_EQ(condition_sides(seq, 2, ConditionKind::kAsmuthBloomStatistical).lhs, 575);
  EXPECT_FALSE(check_condition(seq, 2, ConditionKind::kAsmuthBloomStatistical));
}

TEST(CheckCondition, StatisticalEveryThreshold) {
  const PrimeSequence seq(3, {19, 23, 29, 31});
  for (std::size_t t = 1; t <= 4; ++t) {
    EXPECT_TRUE(check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical)) << t;
  }
}

TEST(CheckCondition, MignotteIgnoresP0) {
  const PrimeSequence seq(1, {5, 7, 11});
  EXPECT_TRUE(check_condition(seq, 2, ConditionKind::kMignotte));
  EXPECT_EQ(condition_sides(seq, 2, ConditionKind::kMignotte).lhs, 11);
}

TEST(CheckCondition, ThresholdOutsideRange) {
  const PrimeSequence seq(5, {11, 13, 17});
  EXPECT_MTSS_ERROR(check_condition(seq, 0, ConditionKind::kMignotte), ErrorCode::kBadThreshold);
  EXPECT_MTSS_ERROR(check_condition(seq, 4, ConditionKind::kAsmuthBloomClassic),
                    ErrorCode::kBadThreshold);
}

TEST(CheckCondition, AgreesWithOracleOnRandomSequences) {
  const auto small = oracle::sieve(3000);
  Rng rng(8);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng.next_u64() % 7;
    std::size_t first = 2 + rng.next_u64() % (small.size() - 20);
    std::vector<BigInt> primes;
    for (std::size_t i = 0; i < n; ++i) primes.push_back(BigInt(static_cast<unsigned long>(small[first + i])));
    const BigInt p0 = 2;
    const PrimeSequence seq(p0, primes);
    for (std::size_t t = 1; t <= n; ++t) {
      EXPECT_EQ(check_condition(seq, t, ConditionKind::kAsmuthBloomStatistical),
                oracle::statistical_holds(p0, primes, t));
    }
  }
}

// For odd n the anchor inequality can hold while a middle threshold fails.
TEST(AnchorSequence, AnchorInequalityAloneIsNotEnoughForOddN) {
  const PrimeSequence seq(3, {11, 13, 17});
  EXPECT_TRUE(check_condition(seq, 0, ConditionKind::kAnchor));
  EXPECT_FALSE(check_condition(seq, 2, ConditionKind::kAsmuthBloomStatistical));
}

TEST(AnchorSequence, SmallCases) {
  const PrimeSequence a = generate_anchor_sequence(3, 4);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(check_condition(a, 0, ConditionKind::kAnchor));
  expect_full_sweep(a);

  const PrimeSequence b = generate_anchor_sequence(2, 1);
  EXPECT_GT(b.modulus(1), 4);
  EXPECT_TRUE(is_probable_prime(b.modulus(1)));

  const PrimeSequence c = generate_anchor_sequence(5, 6);
  EXPECT_GT(c.modulus(1), 25);
  EXPECT_TRUE(check_condition(c, 0, ConditionKind::kAnchor));
  expect_full_sweep(c);
}

TEST(AnchorSequence, SweepOverSizes) {
  for (const BigInt& p0 : {BigInt(2), BigInt(3), BigInt(5), BigInt(7), BigInt(65537),
                          BigInt("4294967291")}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const PrimeSequence seq = generate_anchor_sequence(p0, n);
      ASSERT_EQ(seq.size(), n);
      EXPECT_GE(seq.modulus(1), 2 * p0 * p0);
      for (const BigInt& p : seq.primes()) {
        EXPECT_TRUE(is_probable_prime(p));
        EXPECT_EQ(gcd(p, p0), 1);
      }
      expect_full_sweep(seq);
    }
  }
}

TEST(AnchorSequence, CompositeP0) {
  const PrimeSequence seq = generate_anchor_sequence(220, 5);
  EXPECT_GE(seq.modulus(1), 2 * 220 * 220);
  expect_full_sweep(seq);
}

TEST(HfSequence, KnownSequencesSatisfyClassicCondition) {
  EXPECT_TRUE(check_condition(PrimeSequence(5, {11, 13, 17, 23}), 2,
                              ConditionKind::kAsmuthBloomClassic));
  const PrimeSequence level2(5, {29, 31, 37, 61, 67, 71});
  EXPECT_TRUE(check_condition(level2, 3, ConditionKind::kAsmuthBloomClassic));
  const ConditionSides sides = condition_sides(level2, 3, ConditionKind::kAsmuthBloomClassic);
  EXPECT_EQ(sides.lhs, 23785);
  EXPECT_EQ(sides.rhs, 33263);
}

TEST(HfSequence, ThresholdAboveCount) {
  Rng rng(1);
  EXPECT_MTSS_ERROR(generate_hf_sequence(5, 3, 4, rng), ErrorCode::kBadThreshold);
}

TEST(HfSequence, GeneratedSequencesSatisfyClassicCondition) {
  Rng rng(21);
  for (std::size_t count = 1; count <= 8; ++count) {
    for (std::size_t t = 1; t <= count; ++t) {
      const PrimeSequence seq = generate_hf_sequence(5, count, t, rng);
      EXPECT_TRUE(check_condition(seq, t, ConditionKind::kAsmuthBloomClassic));
      EXPECT_GT(seq.modulus(1), 5);
    }
  }
}

TEST(HfSequence, FloorIsRespected) {
  Rng rng(2);
  const PrimeSequence seq = generate_hf_sequence(5, 3, 2, rng, 1000);
  EXPECT_GE(seq.modulus(1), 1000);
}

TEST(ConditionKind, NamesRoundTrip) {
  for (ConditionKind k : {ConditionKind::kMignotte, ConditionKind::kAsmuthBloomClassic,
                          ConditionKind::kAsmuthBloomStatistical, ConditionKind::kAnchor}) {
    EXPECT_EQ(condition_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(condition_kind_from_string("bogus"));
}

}  // namespace
}  // namespace mtss

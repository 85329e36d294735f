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

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "expect_error.hpp"
#include "table_one.hpp"
#include "mtss/harn_fuyou.hpp"

namespace mtss::hf {
namespace {

Deal example2() { return deal_fixed_forced(example2_structure(), example2_parameters()); }

std::vector<Share> level_two_shares(const Deal& d) { return {d.shares.begin() + 4, d.shares.end()}; }

TEST(Example2, Transcript) {
  const Deal d = example2();
  EXPECT_EQ(d.dealer.blinded, (std::vector<BigInt>{26, 4761}));
  std::vector<BigInt> values;
  for (const Share& s : d.shares) values.push_back(s.value);
  EXPECT_EQ(values, (std::vector<BigInt>{4, 0, 9, 3, 5, 18}));
  std::vector<BigInt> deltas, moduli;
  for (const PublicEntry& e : d.public_info) {
    EXPECT_EQ(e.target_level, 2u);
    deltas.push_back(e.delta);
    moduli.push_back(e.modulus);
  }
  EXPECT_EQ(deltas, (std::vector<BigInt>{0, 4, 55, 22}));
  EXPECT_EQ(moduli, (std::vector<BigInt>{71, 67, 61, 37}));
}

TEST(Example2, BlindedValueResiduesMatchFirstTableRow) {
  const Deal d = example2();
  const BigInt& y2 = d.dealer.blinded[1];
  EXPECT_EQ(y2 % 71, 4);
  EXPECT_EQ(y2 % 67, 4);
  EXPECT_EQ(y2 % 61, 3);
  EXPECT_EQ(y2 % 37, 25);
}

TEST(Example2, BoundsOfThresholdRanges) {
  const Deal d = example2();
  EXPECT_EQ(d.params.levels[0].lower, 23);
  EXPECT_EQ(d.params.levels[0].upper, 143);
  EXPECT_EQ(d.params.levels[1].lower, 4757);
  EXPECT_EQ(d.params.levels[1].upper, 33263);
}

TEST(Example2, Reconstruction) {
  const Deal d = example2();
  const std::vector<Share> mixed{d.shares[4], d.shares[5], d.shares[0]};
  EXPECT_EQ(reconstruct(d.params, mixed, d.public_info, 2), 1);
  const std::vector<Share> top{d.shares[0], d.shares[1]};
  EXPECT_EQ(reconstruct(d.params, top, d.public_info, 1), 1);
  EXPECT_MTSS_ERROR(reconstruct(d.params, level_two_shares(d), d.public_info, 2),
                    ErrorCode::kInsufficientShares);
  EXPECT_MTSS_ERROR(reconstruct(d.params, mixed, {}, 2), ErrorCode::kDeltaMissing);
}

TEST(Example2, AttackCandidatesAndIntervals) {
  const Deal d = example2();
  const AttackInput input = attack_input(d.params, level_two_shares(d), d.public_info, 2);
  const AttackReport r = attack(input);
  EXPECT_EQ(r.base, 266);
  EXPECT_EQ(r.step, 899);
  EXPECT_EQ(r.k_min, 5);
  EXPECT_EQ(r.k_max, 36);
  ASSERT_EQ(r.rows.size(), 32u);
  const std::vector<std::vector<ResidueInterval>> expected{
      {{0, 10}}, {{4, 16}}, {{55, 60}, {0, 10}}, {{22, 36}, {0, 7}}};
  EXPECT_EQ(r.intervals, expected);
  EXPECT_EQ(r.survivors, (std::vector<BigInt>{4761}));
  EXPECT_EQ(r.secrets, (std::vector<BigInt>{1}));
}

TEST(Example2, FullTableIsReproduced) {
  const Deal d = example2();
  const AttackReport r = attack(attack_input(d.params, level_two_shares(d), d.public_info, 2));
  const auto& table = oracle::reference_table();
  ASSERT_EQ(r.rows.size(), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const CandidateRow& row = r.rows[i];
    EXPECT_EQ(row.candidate, table[i].candidate);
    EXPECT_EQ(row.secret, table[i].candidate % 5);
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(row.implied[c], table[i].implied[c]) << table[i].candidate << " col " << c;
      // The reference flags omit one in-range cell: 16 lies in [4, 16].
      const bool exception = table[i].candidate == 13751 && c == 1;
      EXPECT_EQ(row.in_range[c], table[i].bold[c] || exception)
          << table[i].candidate << " col " << c;
    }
    EXPECT_EQ(row.feasible, table[i].candidate == 4761);
  }
}

TEST(Example2, CandidateWithThreeInRangeResiduesIsEliminated) {
  const Deal d = example2();
  const AttackReport r = attack(attack_input(d.params, level_two_shares(d), d.public_info, 2));
  const CandidateRow& row = r.rows[12];
  ASSERT_EQ(row.candidate, 15549);
  EXPECT_EQ(row.implied, (std::vector<BigInt>{0, 5, 55, 9}));
  EXPECT_EQ(row.in_range, (std::vector<bool>{true, true, true, false}));
  EXPECT_FALSE(row.feasible);
}

TEST(Example2, NoPublicInfoLeavesSecretsSpread) {
  const Deal d = example2();
  AttackInput input = attack_input(d.params, level_two_shares(d), d.public_info, 2);
  input.targets.clear();
  const AttackReport r = attack(input);
  EXPECT_EQ(r.survivors.size(), 32u);
  std::map<BigInt, int> per_secret;
  for (const CandidateRow& row : r.rows) ++per_secret[row.secret];
  EXPECT_EQ(per_secret.size(), 5u);
  for (const auto& [secret, count] : per_secret) {
    EXPECT_GE(count, 6) << secret;
    EXPECT_LE(count, 7) << secret;
  }
}

TEST(Example2, RenderedTableMentionsSurvivor) {
  const Deal d = example2();
  const AttackInput input = attack_input(d.params, level_two_shares(d), d.public_info, 2);
  const std::string text = render_table(attack(input), input);
  EXPECT_NE(text.find("survivors: 4761"), std::string::npos);
  EXPECT_NE(text.find("secrets: 1"), std::string::npos);
  EXPECT_NE(text.find("266 + 899*K, 5 <= K <= 36"), std::string::npos);
}

TEST(FeasibleIntervals, WrapAround) {
  const AttackTarget t{3, 55, 61, 17};
  EXPECT_EQ(feasible_intervals(t), (std::vector<ResidueInterval>{{55, 60}, {0, 10}}));
  const AttackTarget plain{1, 0, 71, 11};
  EXPECT_EQ(feasible_intervals(plain), (std::vector<ResidueInterval>{{0, 10}}));
}

TEST(OriginalVariant, InfeasibleSettings) {
  Rng rng(1);
  EXPECT_MTSS_ERROR(deal_original(1, 5, LevelStructure({2, 3}, {2, 3}), rng),
                    ErrorCode::kGapInfeasible);
  EXPECT_MTSS_ERROR(deal_original(1, 5, LevelStructure({3, 3}, {2, 4}), rng),
                    ErrorCode::kBadThreshold);
}

TEST(OriginalVariant, FeasibleSettingRoundTrips) {
  const LevelStructure L({3, 5}, {2, 3});
  Rng rng(4);
  for (long s = 0; s < 5; ++s) {
    const Deal d = deal_original(s, 5, L, rng);
    const std::vector<Share> top{d.shares[0], d.shares[2]};
    EXPECT_EQ(reconstruct(d.params, top, d.public_info, 1), s);
    const std::vector<Share> low{d.shares[3], d.shares[5], d.shares[7]};
    EXPECT_EQ(reconstruct(d.params, low, d.public_info, 2), s);
    const std::vector<Share> mixed{d.shares[1], d.shares[4], d.shares[6]};
    EXPECT_EQ(reconstruct(d.params, mixed, d.public_info, 2), s);
  }
}

TEST(FixedVariant, SingleLevelIsClassicAsmuthBloom) {
  const LevelStructure L({4}, {2});
  Rng rng(6);
  const Deal d = deal_fixed(3, 5, L, rng);
  EXPECT_TRUE(d.public_info.empty());
  const auto& primes = d.params.levels[0].primes;
  EXPECT_LT(5 * primes.back(), primes[0] * primes[1]);
  const BigInt& y = d.dealer.blinded[0];
  EXPECT_EQ(y % 5, 3);
  for (const Share& s : d.shares) EXPECT_EQ(s.value, y % s.modulus);
}

TEST(FixedVariant, RandomDealsRoundTripAndSurviveAttack) {
  const LevelStructure L({3, 3}, {2, 3});
  Rng rng(15);
  for (int round = 0; round < 10; ++round) {
    const long s = static_cast<long>(rng.next_u64() % 7);
    const Deal d = deal_fixed(s, 7, L, rng);
    const BigInt& y2 = d.dealer.blinded[1];
    EXPECT_GT(y2, d.params.levels[1].lower);
    EXPECT_LT(y2, d.params.levels[1].upper);
    const std::vector<Share> mixed{d.shares[0], d.shares[3], d.shares[4]};
    EXPECT_EQ(reconstruct(d.params, mixed, d.public_info, 2), s);
    const std::vector<Share> corrupted{d.shares[3], d.shares[4]};
    const AttackReport r = attack(attack_input(d.params, corrupted, d.public_info, 2));
    EXPECT_NE(std::find(r.survivors.begin(), r.survivors.end(), y2), r.survivors.end());
  }
}

}  // namespace
}  // namespace mtss::hf

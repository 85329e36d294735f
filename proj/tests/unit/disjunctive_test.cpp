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
#include "mtss/classic.hpp"
#include "mtss/disjunctive.hpp"
#include "mtss/mask.hpp"

namespace mtss {
namespace {

// Every y in [0, bound) matching the residues, by scanning.
std::vector<unsigned long> scan(const std::vector<std::pair<BigInt, BigInt>>& residues,
                                unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long y = 0; y < bound; ++y) {
    bool ok = true;
    for (const auto& [r, p] : residues) ok = ok && BigInt(y) % p == r;
    if (ok) out.push_back(y);
  }
  return out;
}

TEST(Deal, SingleLevelMatchesAsmuthBloom) {
  const PrimeSequence seq = generate_anchor_sequence(5, 4);
  const LevelStructure L({4}, {3});
  Rng a(31), b(31);
  const DealerTranscript t = deal(3, L, seq, a);
  const AsmuthBloomSharing ab = ab_share(3, seq, 3, b);
  ASSERT_EQ(t.shares.size(), ab.shares.size());
  for (std::size_t k = 0; k < ab.shares.size(); ++k) {
    EXPECT_EQ(t.shares[k].value, ab.shares[k].value);
    EXPECT_EQ(t.shares[k].modulus, ab.shares[k].modulus);
  }
  EXPECT_TRUE(t.pub.deltas.empty());
}

TEST(Deal, EffectiveResiduesMatchBlindedValues) {
  const PrimeSequence seq = generate_anchor_sequence(5, 3);
  const LevelStructure L({1, 2}, {1, 2});
  Rng rng(6);
  const DealerTranscript t = deal(4, L, seq, rng);
  for (std::size_t i = 1; i <= 2; ++i) {
    const BigInt& y = t.dealer.blinded[i - 1];
    EXPECT_EQ(y, 4 + t.dealer.alphas[i - 1] * 5);
    EXPECT_LT(y, level_bound(L, seq, i));
    for (const MtssShare& share : t.shares) {
      if (share.level > i) continue;
      EXPECT_EQ(effective_residue(share, i, t.pub.deltas), y % share.modulus);
    }
  }
}

TEST(Deal, DeltaIsDefinedAgainstTheMask) {
  const PrimeSequence seq = generate_anchor_sequence(5, 5);
  const LevelStructure L({2, 3}, {2, 3});
  Rng rng(8);
  const DealerTranscript t = deal(2, L, seq, rng);
  for (const PublicDelta& d : t.pub.deltas) {
    const MtssShare& share = t.shares[d.participant - 1];
    const BigInt y = t.dealer.blinded[d.level - 1];
    const BigInt expected =
        ((y - mask(d.participant, share.value, d.level, share.modulus)) % share.modulus +
         share.modulus) % share.modulus;
    EXPECT_EQ(d.value, expected);
  }
}

TEST(Deal, DeltaCount) {
  const PrimeSequence seq = generate_anchor_sequence(7, 6);
  const LevelStructure L({1, 2, 3}, {1, 2, 4});
  Rng rng(2);
  const DealerTranscript t = deal(6, L, seq, rng);
  std::size_t expected = 0;
  for (ParticipantId k = 1; k <= 6; ++k) expected += 3 - L.level_of(k);
  EXPECT_EQ(t.pub.deltas.size(), expected);
}

TEST(Deal, EffectiveResidueRecoversUniqueBlindedValue) {
  const PrimeSequence seq = generate_anchor_sequence(3, 3);
  const LevelStructure L({1, 2}, {1, 2});
  Rng rng(10);
  const DealerTranscript t = deal(1, L, seq, rng);
  const unsigned long bound = level_bound(L, seq, 2).get_ui();
  // Member 1 (level 1, masked) and member 2 (level 2) at level 2.
  const auto hits = scan({{effective_residue(t.shares[0], 2, t.pub.deltas), t.shares[0].modulus},
                          {t.shares[1].value, t.shares[1].modulus}},
                         bound);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(BigInt(hits.front()), t.dealer.blinded[1]);
}

TEST(EffectiveResidue, HomeAndDownward) {
  const PrimeSequence seq = generate_anchor_sequence(5, 3);
  const LevelStructure L({1, 2}, {1, 2});
  Rng rng(3);
  const DealerTranscript t = deal(0, L, seq, rng);
  EXPECT_EQ(effective_residue(t.shares[1], 2, t.pub.deltas), t.shares[1].value);
  EXPECT_MTSS_ERROR(effective_residue(t.shares[1], 1, t.pub.deltas), ErrorCode::kDeltaMissing);
  EXPECT_MTSS_ERROR(effective_residue(t.shares[0], 2, {}), ErrorCode::kDeltaMissing);
}

TEST(Deal, InputValidation) {
  const LevelStructure L({2, 3}, {2, 3});
  Rng rng(1);
  EXPECT_MTSS_ERROR(deal(1, L, generate_anchor_sequence(5, 4), rng),
                    ErrorCode::kStructureMismatch);
  EXPECT_MTSS_ERROR(deal(5, L, generate_anchor_sequence(5, 5), rng),
                    ErrorCode::kSecretOutOfRange);
  EXPECT_MTSS_ERROR(deal(1, L, PrimeSequence(5, {11, 13, 17, 23, 29}), rng),
                    ErrorCode::kConditionViolated);
}

TEST(Reconstruct, SettingHarnFuyouCannotHandle) {
  const PrimeSequence seq = generate_anchor_sequence(5, 5);
  const LevelStructure L({2, 3}, {2, 3});
  Rng rng(42);
  const DealerTranscript t = deal(3, L, seq, rng);
  EXPECT_EQ(reconstruct({1, 2}, t.shares, t.pub), 3);
  EXPECT_MTSS_ERROR(reconstruct({3, 4}, t.shares, t.pub), ErrorCode::kAccessDenied);
  EXPECT_EQ(reconstruct({1, 3, 4}, t.shares, t.pub), 3);
  EXPECT_EQ(reconstruct({3, 4, 5}, t.shares, t.pub), 3);
}

TEST(Reconstruct, OnlyCoalitionSharesAreUsed) {
  const PrimeSequence seq = generate_anchor_sequence(5, 5);
  const LevelStructure L({2, 3}, {2, 3});
  Rng rng(42);
  const DealerTranscript t = deal(3, L, seq, rng);
  const std::vector<MtssShare> partial{t.shares[0]};
  EXPECT_MTSS_ERROR(reconstruct({1, 2}, partial, t.pub), ErrorCode::kInsufficientShares);
  auto tampered = t.shares;
  tampered[1].modulus += 2;
  EXPECT_MTSS_ERROR(reconstruct({1, 2}, tampered, t.pub), ErrorCode::kInconsistentShares);
}

TEST(Reconstruct, ForcedAlphasAreHonoured) {
  const PrimeSequence seq = generate_anchor_sequence(5, 3);
  const LevelStructure L({1, 2}, {1, 2});
  const DealerTranscript t = deal_with_alphas(2, L, seq, {0, 0});
  EXPECT_EQ(t.dealer.blinded, (std::vector<BigInt>{2, 2}));
  EXPECT_EQ(t.shares[0].value, 2);
  EXPECT_MTSS_ERROR(deal_with_alphas(2, L, seq, {0}), ErrorCode::kStructureMismatch);
  EXPECT_MTSS_ERROR(deal_with_alphas(2, L, seq, {BigInt(1) << 80, 0}),
                    ErrorCode::kSecretOutOfRange);
}

TEST(Reconstruct, SeedDeterminism) {
  const PrimeSequence seq = generate_anchor_sequence(7, 5);
  const LevelStructure L({2, 3}, {2, 3});
  Rng a(77), b(77);
  const DealerTranscript x = deal(5, L, seq, a);
  const DealerTranscript y = deal(5, L, seq, b);
  EXPECT_EQ(x.shares, y.shares);
  EXPECT_EQ(x.pub, y.pub);
}

TEST(Reconstruct, EveryAuthorizedCoalitionEverySecret) {
  const LevelStructure L({2, 2, 2}, {1, 3, 5});
  const PrimeSequence seq = generate_anchor_sequence(7, 6);
  Rng rng(12);
  for (long s = 0; s < 7; ++s) {
    const DealerTranscript t = deal(s, L, seq, rng);
    for (unsigned bits = 0; bits < 64; ++bits) {
      Coalition A;
      for (ParticipantId k = 1; k <= 6; ++k) {
        if (bits >> (k - 1) & 1) A.insert(k);
      }
      if (authorized_disjunctive(A, L)) {
        EXPECT_EQ(reconstruct(A, t.shares, t.pub), s);
      } else {
        EXPECT_MTSS_ERROR(reconstruct(A, t.shares, t.pub), ErrorCode::kAccessDenied);
      }
    }
  }
}

}  // namespace
}  // namespace mtss

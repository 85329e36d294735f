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

#include <cstdint>
#include <vector>

#include "expect_error.hpp"
#include "mtss/number_theory.hpp"
#include "oracles.hpp"

namespace mtss {
namespace {

TEST(ExtendedGcd, ZeroFirstArgument) {
  const GcdResult r = extended_gcd(0, 7);
  EXPECT_EQ(r.g, 7);
  EXPECT_EQ(r.u, 0);
  EXPECT_EQ(r.v, 1);
}

TEST(ExtendedGcd, BezoutIdentityHolds) {
  const GcdResult r = extended_gcd(240, 46);
  EXPECT_EQ(r.g, 2);
  EXPECT_EQ(240 * r.u + 46 * r.v, 2);
  EXPECT_EQ(extended_gcd(29, 31).g, 1);
}

TEST(ExtendedGcd, RandomPairsSatisfyIdentity) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const BigInt a = rng.uniform_below(BigInt(1) << 90);
    const BigInt b = rng.uniform_below(BigInt(1) << 70) + 1;
    const GcdResult r = extended_gcd(a, b);
    EXPECT_EQ(a * r.u + b * r.v, r.g);
    EXPECT_EQ(r.g, gcd(a, b));
  }
}

TEST(ModInverse, Identity) { EXPECT_EQ(mod_inverse(1, 97), 1); }

TEST(ModInverse, MatchesExhaustiveSearch) {
  EXPECT_EQ(mod_inverse(31, 29), BigInt(*oracle::inverse_scan(31, 29)));
  for (std::uint64_t m = 2; m < 120; ++m) {
    for (std::uint64_t a = 0; a < m; ++a) {
      const auto expected = oracle::inverse_scan(a, m);
      if (expected) {
        EXPECT_EQ(mod_inverse(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(m))),
                  BigInt(static_cast<unsigned long>(*expected)));
      } else {
        EXPECT_MTSS_ERROR(mod_inverse(BigInt(static_cast<unsigned long>(a)),
                                      BigInt(static_cast<unsigned long>(m))),
                          ErrorCode::kNotInvertible);
      }
    }
  }
}

TEST(ModInverse, NotInvertible) {
  EXPECT_MTSS_ERROR(mod_inverse(10, 15), ErrorCode::kNotInvertible);
}

TEST(CrtSolve, ExampleTwoLevelTwoPair) {
  const std::vector<Congruence> sys{{5, 29}, {18, 31}};
  EXPECT_EQ(crt_solve(sys), 266);
}

TEST(CrtSolve, ExampleTwoLevelOne) {
  const std::vector<Congruence> sys{{4, 11}, {0, 13}, {9, 17}, {3, 23}};
  EXPECT_EQ(crt_solve(sys), 26);
}

TEST(CrtSolve, SingleCongruence) {
  const std::vector<Congruence> sys{{12, 41}};
  EXPECT_EQ(crt_solve(sys), 12);
}

TEST(CrtSolve, RejectsSharedFactor) {
  const std::vector<Congruence> sys{{1, 6}, {2, 9}};
  EXPECT_MTSS_ERROR(crt_solve(sys), ErrorCode::kNonCoprimeModuli);
}

TEST(CrtSolve, AgreesWithScanOnSmallSystems) {
  const auto primes = oracle::sieve(200);
  Rng rng(5);
  for (int round = 0; round < 150; ++round) {
    std::vector<std::uint64_t> m;
    std::uint64_t total = 1;
    while (true) {
      const std::uint64_t p = primes[rng.next_u64() % primes.size()];
      bool fresh = true;
      for (std::uint64_t q : m) fresh = fresh && q != p;
      if (!fresh) continue;
      if (total * p > 1'000'000) break;
      m.push_back(p);
      total *= p;
    }
    std::vector<std::uint64_t> r;
    std::vector<Congruence> sys;
    for (std::uint64_t p : m) {
      r.push_back(rng.next_u64() % (3 * p));
      sys.push_back({BigInt(static_cast<unsigned long>(r.back())), BigInt(static_cast<unsigned long>(p))});
    }
    EXPECT_EQ(crt_solve(sys), BigInt(static_cast<unsigned long>(*oracle::crt_scan(r, m))));
  }
}

TEST(Primality, SmallCases) {
  EXPECT_FALSE(is_probable_prime(1));
  EXPECT_FALSE(is_probable_prime(899));
  EXPECT_TRUE(is_probable_prime(71));
  EXPECT_FALSE(is_probable_prime(0));
  EXPECT_FALSE(is_probable_prime(-7));
}

TEST(Primality, AgreesWithSieve) {
  const auto primes = oracle::sieve(100'000);
  std::size_t next = 0;
  for (unsigned long x = 0; x <= 100'000; ++x) {
    const bool expected = next < primes.size() && primes[next] == x;
    if (expected) ++next;
    ASSERT_EQ(is_probable_prime(BigInt(x)), expected) << x;
  }
}

TEST(Primality, CarmichaelAndStrongPseudoprimes) {
  for (unsigned long c : {561ul, 1105ul, 1729ul, 2465ul, 2821ul, 6601ul, 3215031751ul}) {
    EXPECT_FALSE(is_probable_prime(BigInt(c))) << c;
  }
  EXPECT_FALSE(is_probable_prime(BigInt("3825123056546413051")));
}

TEST(Primality, LargeKnownValues) {
  const BigInt m127 = (BigInt(1) << 127) - 1;
  EXPECT_TRUE(is_probable_prime(m127));
  EXPECT_FALSE(is_probable_prime((BigInt(1) << 128) + 1));
  EXPECT_FALSE(is_probable_prime(m127 * ((BigInt(1) << 61) - 1)));
}

TEST(NextPrime, SmallestPrimeAtOrAbove) {
  const auto primes = oracle::sieve(5000);
  for (unsigned long x = 0; x < 4900; x += 7) {
    unsigned long expected = 0;
    for (std::uint64_t p : primes) {
      if (p >= x) {
        expected = p;
        break;
      }
    }
    EXPECT_EQ(next_prime(BigInt(x)), expected) << x;
  }
}

TEST(PowMod, MatchesSquareAndMultiply) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const BigInt m = rng.uniform_below(BigInt(1) << 80) + 2;
    const BigInt b = rng.uniform_below(m);
    const BigInt e = rng.uniform_below(BigInt(1) << 40);
    EXPECT_EQ(pow_mod(b, e, m), oracle::power_mod(b, e, m));
  }
}

}  // namespace
}  // namespace mtss

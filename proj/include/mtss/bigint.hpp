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

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace mtss {

using BigInt = mpz_class;

// Seedable source of randomness. Every generator in the library draws from
// an explicit Rng so identical seeds give identical transcripts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  BigInt uniform_below(const BigInt& bound);

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  BigInt uniform_between(const BigInt& lo, const BigInt& hi);

  // Uniform integer with exactly `bits` bits (top bit set).
  BigInt random_bits(unsigned bits);

 private:
  std::mt19937_64 engine_;
};

std::string to_decimal(const BigInt& value);

// Parses a non-negative decimal string; throws Error(kMalformedDocument).
BigInt parse_decimal(std::string_view text);

std::size_t bit_length(const BigInt& value);

}  // namespace mtss

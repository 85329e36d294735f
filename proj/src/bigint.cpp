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

#include "mtss/bigint.hpp"

#include "mtss/errors.hpp"

namespace mtss {

namespace {

BigInt random_word_bits(std::mt19937_64& engine, std::size_t bits) {
  BigInt out = 0;
  std::size_t remaining = bits;
  while (remaining > 0) {
    const std::size_t take = remaining >= 64 ? 64 : remaining;
    std::uint64_t word = engine();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    out <<= static_cast<mp_bitcnt_t>(take);
    BigInt w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    out += w;
    remaining -= take;
  }
  return out;
}

}  // namespace

BigInt Rng::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = bit_length(bound - 1);
  // Rejection sampling keeps the distribution exactly uniform.
  while (true) {
    BigInt candidate = random_word_bits(engine_, bits);
    if (candidate < bound) return candidate;
  }
}

BigInt Rng::uniform_between(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw std::invalid_argument("uniform_between: empty range");
  return lo + uniform_below(hi - lo + 1);
}

BigInt Rng::random_bits(unsigned bits) {
  if (bits == 0) return 0;
  BigInt value = random_word_bits(engine_, bits);
  mpz_setbit(value.get_mpz_t(), bits - 1);
  return value;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kMalformedDocument, "empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kMalformedDocument,
                  "not a non-negative decimal integer: " + std::string(text));
    }
  }
  return BigInt(std::string(text), 10);
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace mtss

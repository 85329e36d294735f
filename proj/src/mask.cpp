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

#include "mtss/mask.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mtss/number_theory.hpp"

namespace mtss {

namespace {

constexpr std::string_view kDomainTag = "mtss-mask-v1";

void append_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v >> 24));
  out.push_back(static_cast<unsigned char>(v >> 16));
  out.push_back(static_cast<unsigned char>(v >> 8));
  out.push_back(static_cast<unsigned char>(v));
}

void append_integer(std::vector<unsigned char>& out, const BigInt& v) {
  if (v < 0) throw std::invalid_argument("mask: negative input");
  std::size_t count = 0;
  std::vector<unsigned char> bytes((bit_length(v) + 7) / 8);
  if (!bytes.empty()) mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  bytes.resize(count);
  append_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

BigInt mask(ParticipantId k, const BigInt& share_value, std::size_t level,
            const BigInt& modulus) {
  if (modulus < 1) throw std::invalid_argument("mask: modulus must be positive");

  std::vector<unsigned char> suffix;
  append_integer(suffix, BigInt(static_cast<unsigned long>(k)));
  append_integer(suffix, BigInt(static_cast<unsigned long>(level)));
  append_integer(suffix, share_value);

  const std::size_t wanted_bits = 2 * bit_length(modulus);
  const std::size_t blocks = wanted_bits == 0 ? 1 : (wanted_bits + 255) / 256;

  std::vector<unsigned char> wide;
  wide.reserve(blocks * SHA256_DIGEST_LENGTH);
  std::vector<unsigned char> message;
  for (std::size_t c = 0; c < blocks; ++c) {
    message.assign(kDomainTag.begin(), kDomainTag.end());
    append_u32(message, static_cast<std::uint32_t>(c));
    message.insert(message.end(), suffix.begin(), suffix.end());
    std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
    SHA256(message.data(), message.size(), digest.data());
    wide.insert(wide.end(), digest.begin(), digest.end());
  }

  BigInt value;
  mpz_import(value.get_mpz_t(), wide.size(), 1, 1, 1, 0, wide.data());
  return mod_floor(value, modulus);
}

}  // namespace mtss

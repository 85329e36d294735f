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

#include "mtss/access.hpp"
#include "mtss/bigint.hpp"

namespace mtss {

// Per-participant one-way map h_k(x, level) into Z_modulus.
//
// Bit-exact definition, so transcripts are portable:
//   enc(v)   = u32be(byte length of v) || v as minimal big-endian bytes
//              (zero encodes as length 0)
//   block_c  = SHA-256("mtss-mask-v1" || u32be(c) || enc(k) || enc(level) || enc(x))
//   wide     = block_0 || block_1 || ... , enough blocks for at least
//              2 * bitlen(modulus) bits, read as a big-endian integer
//   h_k      = wide mod modulus
// Levels are 1-based.
BigInt mask(ParticipantId k, const BigInt& share_value, std::size_t level,
            const BigInt& modulus);

}  // namespace mtss

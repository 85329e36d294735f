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

#include <span>
#include <vector>

#include "mtss/bigint.hpp"

namespace mtss {

struct GcdResult {
  BigInt g;  // gcd(a, b) > 0
  BigInt u;  // u*a + v*b == g
  BigInt v;
};

// Requires (a, b) != (0, 0).
GcdResult extended_gcd(const BigInt& a, const BigInt& b);

// Least non-negative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

// Throws kNotInvertible when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

BigInt pow_mod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

struct Congruence {
  BigInt residue;
  BigInt modulus;

  bool operator==(const Congruence&) const = default;
};

// Unique x in [0, P) with x = r_k (mod p_k) for every pair, P the product of
// the moduli. Residues are reduced first. Throws kNonCoprimeModuli.
BigInt crt_solve(std::span<const Congruence> system);

BigInt product(std::span<const BigInt> values);

// Miller-Rabin. Inputs below 2^64 use a fixed witness set that is
// deterministic there; larger inputs use `rounds` witnesses drawn from a
// generator seeded by the input, so the answer is a pure function of x.
bool is_probable_prime(const BigInt& x, int rounds = 40);

// Smallest probable prime >= x.
BigInt next_prime(const BigInt& x);

}  // namespace mtss

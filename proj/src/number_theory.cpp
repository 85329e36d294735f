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

#include "mtss/number_theory.hpp"

#include <array>
#include <stdexcept>

#include "mtss/errors.hpp"

namespace mtss {

namespace {

constexpr std::array<unsigned, 12> kDeterministicWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    constexpr unsigned kLimit = 2000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// One strong-pseudoprime round; odd x > 3, x - 1 = d * 2^r.
bool passes_witness(const BigInt& x, const BigInt& d, unsigned long r,
                    const BigInt& witness) {
  const BigInt x_minus_1 = x - 1;
  BigInt y = pow_mod(witness, d, x);
  if (y == 1 || y == x_minus_1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    y = y * y % x;
    if (y == x_minus_1) return true;
    if (y == 1) return false;
  }
  return false;
}

}  // namespace

GcdResult extended_gcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("extended_gcd(0, 0)");
  GcdResult out;
  mpz_gcdext(out.g.get_mpz_t(), out.u.get_mpz_t(), out.v.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 1) throw std::invalid_argument("mod_inverse: modulus must exceed 1");
  const GcdResult r = extended_gcd(mod_floor(a, m), m);
  if (r.g != 1) {
    throw Error(ErrorCode::kNotInvertible,
                to_decimal(a) + " has no inverse modulo " + to_decimal(m));
  }
  return mod_floor(r.u, m);
}

BigInt pow_mod(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  if (exponent < 0) throw std::invalid_argument("pow_mod: negative exponent");
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return out;
}

BigInt product(std::span<const BigInt> values) {
  BigInt out = 1;
  for (const BigInt& v : values) out *= v;
  return out;
}

BigInt crt_solve(std::span<const Congruence> system) {
  if (system.empty()) throw std::invalid_argument("crt_solve: empty system");
  for (std::size_t a = 0; a < system.size(); ++a) {
    if (system[a].modulus <= 0) throw std::invalid_argument("crt_solve: non-positive modulus");
    for (std::size_t b = a + 1; b < system.size(); ++b) {
      if (gcd(system[a].modulus, system[b].modulus) != 1) {
        throw Error(ErrorCode::kNonCoprimeModuli,
                    to_decimal(system[a].modulus) + " and " +
                        to_decimal(system[b].modulus) + " share a factor");
      }
    }
  }
  BigInt total = 1;
  for (const Congruence& c : system) total *= c.modulus;

  // x = sum (P/p_k) * I_k * r_k mod P with I_k the inverse of P/p_k mod p_k.
  BigInt x = 0;
  for (const Congruence& c : system) {
    if (c.modulus == 1) continue;
    const BigInt cofactor = total / c.modulus;
    const BigInt inv = mod_inverse(cofactor, c.modulus);
    x += cofactor * mod_floor(inv * mod_floor(c.residue, c.modulus), c.modulus);
  }
  return mod_floor(x, total);
}

bool is_probable_prime(const BigInt& x, int rounds) {
  if (rounds < 1) throw std::invalid_argument("is_probable_prime: rounds < 1");
  if (x < 2) return false;
  for (unsigned p : small_primes()) {
    if (x == p) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) return false;
  }

  BigInt d = x - 1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

  if (bit_length(x) <= 64) {
    for (unsigned w : kDeterministicWitnesses) {
      if (!passes_witness(x, d, r, BigInt(w))) return false;
    }
    return true;
  }

  std::uint64_t seed = mpz_get_ui(x.get_mpz_t()) ^ bit_length(x);
  Rng rng(seed);
  const BigInt span = x - 3;  // witnesses in [2, x - 2]
  for (int i = 0; i < rounds; ++i) {
    if (!passes_witness(x, d, r, 2 + rng.uniform_below(span))) return false;
  }
  return true;
}

BigInt next_prime(const BigInt& x) {
  if (x <= 2) return 2;
  BigInt candidate = x;
  if (mpz_even_p(candidate.get_mpz_t())) ++candidate;
  while (!is_probable_prime(candidate)) candidate += 2;
  return candidate;
}

}  // namespace mtss

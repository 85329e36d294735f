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

#include "mtss/threshold_rsa.hpp"

#include <algorithm>
#include <string>

#include "mtss/disjunctive.hpp"
#include "mtss/errors.hpp"
#include "mtss/mask.hpp"
#include "mtss/number_theory.hpp"
#include "mtss/prime_sequence.hpp"

namespace mtss::rsa {

namespace {

constexpr unsigned kMaxModulusBits = 512;
constexpr unsigned kMinModulusBits = 16;

const std::vector<unsigned>& sieve_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned c = 3; c < 5000; c += 2) {
      bool prime = true;
      for (unsigned p : out) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

BigInt reduce_message(const BigInt& msg, const GroupKey& key) {
  const BigInt m = mod_floor(msg, key.n);
  if (m == 0 || gcd(m, key.n) != 1) {
    throw Error(ErrorCode::kMessageNotUnit, "message is not a unit modulo N");
  }
  return m;
}

}  // namespace

SafePrime generate_safe_prime(unsigned bits, Rng& rng, std::size_t max_attempts) {
  if (bits < 4) throw Error(ErrorCode::kGenerationFailure, "safe primes need at least 4 bits");
  const std::vector<unsigned>& small = sieve_primes();
  const unsigned sophie_bits = bits - 1;
  const BigInt ceiling = BigInt(1) << sophie_bits;

  std::size_t attempts = 0;
  while (attempts < max_attempts) {
    // Top two bits set so p = 2q' + 1 keeps exactly `bits` bits and products
    // of two such primes keep exactly twice as many.
    BigInt sophie = rng.random_bits(sophie_bits);
    if (sophie_bits >= 2) mpz_setbit(sophie.get_mpz_t(), sophie_bits - 2);
    mpz_setbit(sophie.get_mpz_t(), 0);

    std::vector<unsigned> residues;
    residues.reserve(small.size());
    for (unsigned p : small) residues.push_back(mpz_fdiv_ui(sophie.get_mpz_t(), p));

    for (; sophie < ceiling && attempts < max_attempts; sophie += 2, ++attempts) {
      bool survives = true;
      for (std::size_t i = 0; i < small.size(); ++i) {
        const unsigned p = small[i];
        const unsigned r = residues[i];
        residues[i] = (r + 2) % p;
        // q' = 0 or 2q' + 1 = 0 (mod p), unless the value is p itself.
        const bool q_div = r == 0 && sophie != p;
        const bool p_div = (2 * r + 1) % p == 0 && 2 * sophie + 1 != p;
        if (q_div || p_div) {
          survives = false;
          for (std::size_t j = i + 1; j < small.size(); ++j) {
            residues[j] = (residues[j] + 2) % small[j];
          }
          break;
        }
      }
      if (!survives) continue;
      if (is_probable_prime(sophie) && is_probable_prime(2 * sophie + 1)) {
        return {2 * sophie + 1, sophie};
      }
    }
  }
  throw Error(ErrorCode::kSearchTimeout, "safe-prime search exhausted its attempt budget");
}

Setup setup_from_primes(const BigInt& p_prime, const BigInt& q_prime, const BigInt& e,
                        const LevelStructure& structure, Rng& rng) {
  if (p_prime == q_prime || !is_probable_prime(p_prime) || !is_probable_prime(q_prime) ||
      !is_probable_prime(2 * p_prime + 1) || !is_probable_prime(2 * q_prime + 1)) {
    throw Error(ErrorCode::kGenerationFailure,
                "p' and q' must be distinct primes with 2p'+1 and 2q'+1 prime");
  }
  const BigInt phi = 4 * p_prime * q_prime;
  if (e < 3 || gcd(e, phi) != 1) {
    throw Error(ErrorCode::kBadExponent, "e must exceed 2 and be coprime to phi(N)");
  }
  const BigInt d = mod_inverse(e, phi);
  const PrimeSequence seq = generate_anchor_sequence(phi, structure.participants());
  DealerTranscript transcript = deal(d, structure, seq, rng);

  Setup out{GroupKey{(2 * p_prime + 1) * (2 * q_prime + 1), e}, structure,
            std::vector<BigInt>(seq.primes().begin(), seq.primes().end()),
            std::move(transcript.shares), std::move(transcript.pub.deltas)};
  return out;
}

Setup setup(unsigned modulus_bits, const BigInt& e, const LevelStructure& structure, Rng& rng) {
  if (modulus_bits < kMinModulusBits || modulus_bits > kMaxModulusBits) {
    throw Error(ErrorCode::kGenerationFailure,
                "modulus size must lie in [" + std::to_string(kMinModulusBits) + ", " +
                    std::to_string(kMaxModulusBits) + "] bits");
  }
  if (e < 3 || mpz_even_p(e.get_mpz_t())) {
    throw Error(ErrorCode::kBadExponent, "e must be odd and exceed 2");
  }
  const unsigned half = modulus_bits / 2;
  while (true) {
    const SafePrime p = generate_safe_prime(half, rng);
    const SafePrime q = generate_safe_prime(modulus_bits - half, rng);
    if (p.sophie == q.sophie) continue;
    if (gcd(e, 4 * p.sophie * q.sophie) != 1) continue;
    return setup_from_primes(p.sophie, q.sophie, e, structure, rng);
  }
}

CoalitionContext CoalitionContext::unchecked(std::span<const ParticipantId> members,
                                             const LevelStructure& structure,
                                             std::span<const BigInt> moduli, std::size_t level) {
  if (level < 1 || level > structure.levels()) {
    throw Error(ErrorCode::kBadThreshold, "unknown level " + std::to_string(level));
  }
  if (moduli.size() != structure.participants()) {
    throw Error(ErrorCode::kStructureMismatch, "one modulus per participant required");
  }
  if (members.empty()) throw Error(ErrorCode::kAccessDenied, "empty coalition");
  CoalitionContext ctx;
  ctx.level_ = level;
  ctx.modulus_product_ = 1;
  for (ParticipantId k : members) {
    if (structure.level_of(k) > level) {
      throw Error(ErrorCode::kNotMember,
                  "participant " + std::to_string(k) + " cannot act at level " +
                      std::to_string(level));
    }
    ctx.modulus_product_ *= moduli[k - 1];
  }
  for (ParticipantId k : members) {
    CoalitionMember member{k, moduli[k - 1], ctx.modulus_product_ / moduli[k - 1], 0};
    member.inverse = mod_inverse(member.cofactor, member.modulus);
    ctx.members_.push_back(std::move(member));
  }
  return ctx;
}

CoalitionContext CoalitionContext::make(const Coalition& A, const LevelStructure& structure,
                                        std::span<const BigInt> moduli, std::size_t level) {
  require_members(A, structure);
  std::vector<ParticipantId> usable = usable_members(A, structure, level);
  if (usable.size() < structure.threshold(level)) {
    throw Error(ErrorCode::kAccessDenied,
                "coalition has " + std::to_string(usable.size()) + " members usable at level " +
                    std::to_string(level) + ", threshold " +
                    std::to_string(structure.threshold(level)));
  }
  usable.resize(structure.threshold(level));
  return unchecked(usable, structure, moduli, level);
}

CoalitionContext CoalitionContext::make(const Coalition& A, const LevelStructure& structure,
                                        std::span<const BigInt> moduli) {
  const auto level = authorized_disjunctive(A, structure);
  if (!level) throw Error(ErrorCode::kAccessDenied, "coalition meets no level threshold");
  return make(A, structure, moduli, *level);
}

std::string CoalitionContext::id() const {
  std::string out = "level=" + std::to_string(level_) + ";members=";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(members_[i].participant);
  }
  return out;
}

const CoalitionMember* CoalitionContext::find(ParticipantId k) const {
  auto it = std::find_if(members_.begin(), members_.end(),
                         [&](const CoalitionMember& m) { return m.participant == k; });
  return it == members_.end() ? nullptr : &*it;
}

BigInt CoalitionContext::exponent(ParticipantId k, const BigInt& residue) const {
  const CoalitionMember* member = find(k);
  if (member == nullptr) {
    throw Error(ErrorCode::kNotMember, "participant " + std::to_string(k) + " not in coalition");
  }
  return mod_floor(residue * member->cofactor * member->inverse, modulus_product_);
}

PartialSignature partial_sign(const BigInt& msg, const MtssShare& share,
                              const CoalitionContext& ctx, const GroupKey& key) {
  const CoalitionMember* member = ctx.find(share.participant);
  if (member == nullptr || share.level > ctx.level()) {
    throw Error(ErrorCode::kNotMember,
                "participant " + std::to_string(share.participant) + " not in " + ctx.id());
  }
  if (share.modulus != member->modulus) {
    throw Error(ErrorCode::kInconsistentShares, "share modulus does not match the coalition");
  }
  const BigInt m = reduce_message(msg, key);
  const BigInt residue = share.level == ctx.level()
                             ? share.value
                             : mask(share.participant, share.value, ctx.level(), share.modulus);
  return {share.participant, pow_mod(m, ctx.exponent(share.participant, residue), key.n),
          ctx.id()};
}

PartialSignature public_part(const BigInt& msg, ParticipantId k, const LevelStructure& structure,
                             std::span<const PublicDelta> deltas, const CoalitionContext& ctx,
                             const GroupKey& key) {
  if (ctx.find(k) == nullptr) {
    throw Error(ErrorCode::kNotMember, "participant " + std::to_string(k) + " not in " + ctx.id());
  }
  const BigInt m = reduce_message(msg, key);
  BigInt residue = 0;
  if (structure.level_of(k) < ctx.level()) {
    const PublicDelta* delta = find_delta(deltas, k, ctx.level());
    if (delta == nullptr) {
      throw Error(ErrorCode::kDeltaMissing, "no public delta for participant " +
                                                std::to_string(k) + " at level " +
                                                std::to_string(ctx.level()));
    }
    residue = delta->value;
  }
  return {k, pow_mod(m, ctx.exponent(k, residue), key.n), ctx.id()};
}

Signature combine(std::span<const PartialSignature> partials,
                  std::span<const PartialSignature> public_parts, const BigInt& msg,
                  const CoalitionContext& ctx, const GroupKey& key) {
  const BigInt m = reduce_message(msg, key);
  const std::string id = ctx.id();
  auto pick = [&](std::span<const PartialSignature> parts, ParticipantId k) -> const BigInt& {
    const PartialSignature* found = nullptr;
    for (const PartialSignature& part : parts) {
      if (part.participant != k) continue;
      if (part.context != id) {
        throw Error(ErrorCode::kInconsistentShares,
                    "part of participant " + std::to_string(k) + " was made for " + part.context);
      }
      if (found != nullptr) {
        throw Error(ErrorCode::kInconsistentShares,
                    "duplicate part for participant " + std::to_string(k));
      }
      found = &part;
    }
    if (found == nullptr) {
      throw Error(ErrorCode::kInsufficientShares,
                  "missing part for participant " + std::to_string(k));
    }
    return found->value;
  };

  BigInt incomplete = 1;
  for (const CoalitionMember& member : ctx.members()) {
    incomplete = incomplete * pick(partials, member.participant) % key.n;
    incomplete = incomplete * pick(public_parts, member.participant) % key.n;
  }

  // Exponents sum to y + delta * M_A with delta below the number of summed
  // parts, and m^y = m^d because y = d (mod phi(N)).
  const BigInt kappa = mod_inverse(pow_mod(m, ctx.modulus_product(), key.n), key.n);
  const unsigned bound = static_cast<unsigned>(2 * ctx.members().size());
  BigInt candidate = incomplete;
  for (unsigned x = 0; x < bound; ++x) {
    if (pow_mod(candidate, key.e, key.n) == m) return {candidate, x};
    candidate = candidate * kappa % key.n;
  }
  throw Error(ErrorCode::kCombinationFailure,
              "no correction below " + std::to_string(bound) + " yields a valid signature");
}

bool verify(const BigInt& msg, const BigInt& signature, const GroupKey& key) {
  if (key.n < 2) return false;
  return pow_mod(mod_floor(signature, key.n), key.e, key.n) == mod_floor(msg, key.n);
}

}  // namespace mtss::rsa

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

#include "mtss/harn_fuyou.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include "mtss/errors.hpp"
#include "mtss/prime_sequence.hpp"

namespace mtss::hf {

namespace {

constexpr int kMaxEscalations = 16;

Level make_level(std::vector<BigInt> primes, std::size_t t) {
  Level level;
  level.primes = std::move(primes);
  std::span<const BigInt> all(level.primes);
  level.lower = product(all.last(t - 1));
  level.upper = product(all.first(t));
  return level;
}

bool classic_holds(const BigInt& p0, const Level& level) { return p0 * level.lower < level.upper; }

// y = s + alpha * p0 strictly inside (lower, upper).
std::pair<BigInt, BigInt> alpha_range(const BigInt& secret, const BigInt& p0,
                                      const Level& level) {
  BigInt lo;
  const BigInt below = level.lower - secret;
  mpz_fdiv_q(lo.get_mpz_t(), below.get_mpz_t(), p0.get_mpz_t());
  lo += 1;
  if (lo < 0) lo = 0;
  BigInt hi;
  const BigInt above = level.upper - 1 - secret;
  mpz_fdiv_q(hi.get_mpz_t(), above.get_mpz_t(), p0.get_mpz_t());
  return {lo, hi};
}

void require_secret(const BigInt& secret, const BigInt& p0) {
  if (p0 < 2) throw Error(ErrorCode::kInvalidSequence, "p0 must exceed 1");
  if (secret < 0 || secret >= p0) {
    throw Error(ErrorCode::kSecretOutOfRange, "secret must lie in Z_p0");
  }
}

// Participants of levels above `level`, ascending.
std::vector<ParticipantId> higher_participants(const LevelStructure& structure,
                                               std::size_t level) {
  std::vector<ParticipantId> out;
  for (ParticipantId k = 1; k <= structure.participants(); ++k) {
    if (structure.level_of(k) < level) out.push_back(k);
  }
  return out;
}

std::size_t index_in_level(const LevelStructure& structure, ParticipantId k) {
  const std::vector<ParticipantId> members = structure.members(structure.level_of(k));
  return static_cast<std::size_t>(std::find(members.begin(), members.end(), k) -
                                  members.begin());
}

// cross[(k, j)] = modulus of participant k's public entry for level j.
using CrossModuli = std::map<std::pair<ParticipantId, std::size_t>, BigInt>;

Deal assemble(Variant variant, const BigInt& secret, const BigInt& p0,
              const LevelStructure& structure, std::vector<Level> levels,
              const CrossModuli& cross, std::vector<BigInt> alphas) {
  Deal out{Parameters{variant, p0, structure, std::move(levels)}, {}, {}, {}};
  for (const BigInt& alpha : alphas) out.dealer.blinded.push_back(secret + alpha * p0);
  out.dealer.alphas = std::move(alphas);

  for (ParticipantId k = 1; k <= structure.participants(); ++k) {
    const std::size_t home = structure.level_of(k);
    const BigInt& modulus = out.params.share_modulus(k);
    out.shares.push_back({k, home, modulus, mod_floor(out.dealer.blinded[home - 1], modulus)});
  }
  for (const auto& [key, modulus] : cross) {
    const auto [k, target] = key;
    const BigInt& share = out.shares[k - 1].value;
    out.public_info.push_back(
        {k, target, mod_floor(out.dealer.blinded[target - 1] - share, modulus), modulus});
  }
  return out;
}

std::vector<BigInt> sample_alphas(const BigInt& secret, const BigInt& p0,
                                  const std::vector<Level>& levels, Rng& rng) {
  std::vector<BigInt> alphas;
  for (const Level& level : levels) {
    const auto [lo, hi] = alpha_range(secret, p0, level);
    if (lo > hi) throw Error(ErrorCode::kConditionViolated, "t-threshold range is empty");
    alphas.push_back(rng.uniform_between(lo, hi));
  }
  return alphas;
}

}  // namespace

const BigInt& Parameters::share_modulus(ParticipantId k) const {
  const std::size_t home = structure.level_of(k);
  return levels.at(home - 1).primes.at(index_in_level(structure, k));
}

LevelStructure example2_structure() { return LevelStructure({4, 2}, {2, 3}); }

ForcedParameters example2_parameters() {
  return ForcedParameters{
      5,
      1,
      {{11, 13, 17, 23}, {29, 31, 37, 61, 67, 71}},
      {5, 952},
  };
}

Deal deal_original(const BigInt& secret, const BigInt& p0, const LevelStructure& structure,
                   Rng& rng) {
  require_secret(secret, p0);
  const std::size_t m = structure.levels();
  for (std::size_t i = 1; i <= m; ++i) {
    if (structure.threshold(i) > structure.size(i)) {
      throw Error(ErrorCode::kBadThreshold,
                  "level " + std::to_string(i) + ": no (" +
                      std::to_string(structure.threshold(i)) + "," +
                      std::to_string(structure.size(i)) + ")-Asmuth-Bloom sequence exists");
    }
  }
  for (std::size_t j = 2; j <= m; ++j) {
    const std::size_t t = structure.threshold(j);
    const std::size_t n = structure.size(j);
    // Cross-level primes must sit strictly between p^j_t and p^j_{n-t+2}.
    if (t >= n - t + 2) {
      throw Error(ErrorCode::kGapInfeasible,
                  "level " + std::to_string(j) + ": p_" + std::to_string(t) + " < p < p_" +
                      std::to_string(n - t + 2) + " contradicts the increasing prime order");
    }
  }

  BigInt start = 2 * p0 + rng.uniform_below(2 * p0);
  for (int round = 0; round < kMaxEscalations; ++round, start *= 2) {
    std::vector<Level> levels;
    CrossModuli cross;
    BigInt next = start;
    bool ok = true;
    for (std::size_t j = 1; j <= m && ok; ++j) {
      const std::size_t t = structure.threshold(j);
      const std::size_t n = structure.size(j);
      const std::vector<ParticipantId> higher = higher_participants(structure, j);
      std::vector<BigInt> pool = consecutive_primes(next, n + higher.size());
      next = pool.back() + 1;

      // Layout: p_1..p_t, reserved cross-level primes, p_{t+1}..p_n.
      std::vector<BigInt> own(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(t));
      for (std::size_t r = 0; r < higher.size(); ++r) {
        cross[{higher[r], j}] = pool[t + r];
      }
      own.insert(own.end(), pool.begin() + static_cast<std::ptrdiff_t>(t + higher.size()),
                 pool.end());
      for (const BigInt& p : pool) ok = ok && gcd(p, p0) == 1;
      levels.push_back(make_level(std::move(own), t));
      ok = ok && classic_holds(p0, levels.back());
    }
    if (!ok) continue;
    std::vector<BigInt> alphas = sample_alphas(secret, p0, levels, rng);
    return assemble(Variant::kOriginal, secret, p0, structure, std::move(levels), cross,
                    std::move(alphas));
  }
  throw Error(ErrorCode::kGenerationFailure, "no Harn-Fuyou prime layout found");
}

namespace {

CrossModuli fixed_cross_moduli(const LevelStructure& structure, const std::vector<Level>& levels) {
  CrossModuli cross;
  for (std::size_t j = 2; j <= structure.levels(); ++j) {
    const std::vector<ParticipantId> higher = higher_participants(structure, j);
    const std::vector<BigInt>& primes = levels[j - 1].primes;
    // Extras are handed out from the largest prime down.
    for (std::size_t r = 0; r < higher.size(); ++r) {
      cross[{higher[r], j}] = primes[primes.size() - 1 - r];
    }
  }
  return cross;
}

}  // namespace

Deal deal_fixed(const BigInt& secret, const BigInt& p0, const LevelStructure& structure,
                Rng& rng) {
  require_secret(secret, p0);
  std::vector<Level> levels;
  BigInt floor = 0;
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    const std::size_t t = structure.threshold(i);
    const PrimeSequence seq =
        generate_hf_sequence(p0, structure.cumulative_size(i), t, rng, floor);
    floor = seq.primes().back() + 1;
    levels.push_back(make_level({seq.primes().begin(), seq.primes().end()}, t));
  }
  const CrossModuli cross = fixed_cross_moduli(structure, levels);
  std::vector<BigInt> alphas = sample_alphas(secret, p0, levels, rng);
  return assemble(Variant::kFixed, secret, p0, structure, std::move(levels), cross,
                  std::move(alphas));
}

Deal deal_fixed_forced(const LevelStructure& structure, const ForcedParameters& forced) {
  require_secret(forced.secret, forced.p0);
  if (forced.level_primes.size() != structure.levels() ||
      forced.alphas.size() != structure.levels()) {
    throw Error(ErrorCode::kStructureMismatch, "one prime list and alpha per level required");
  }
  std::vector<Level> levels;
  std::vector<BigInt> all;
  for (std::size_t i = 1; i <= structure.levels(); ++i) {
    const std::vector<BigInt>& primes = forced.level_primes[i - 1];
    if (primes.size() != structure.cumulative_size(i)) {
      throw Error(ErrorCode::kStructureMismatch,
                  "level " + std::to_string(i) + " needs U_i primes");
    }
    for (std::size_t a = 0; a < primes.size(); ++a) {
      if (!(forced.p0 < primes[a]) || (a > 0 && !(primes[a - 1] < primes[a])) ||
          gcd(primes[a], forced.p0) != 1) {
        throw Error(ErrorCode::kInvalidSequence, "level primes must increase above p0");
      }
    }
    all.insert(all.end(), primes.begin(), primes.end());
    levels.push_back(make_level(primes, structure.threshold(i)));
    if (!classic_holds(forced.p0, levels.back())) {
      throw Error(ErrorCode::kConditionViolated,
                  "level " + std::to_string(i) + " violates p0 * lower < upper");
    }
    const BigInt y = forced.secret + forced.alphas[i - 1] * forced.p0;
    if (!(levels.back().lower < y && y < levels.back().upper)) {
      throw Error(ErrorCode::kConditionViolated,
                  "y_" + std::to_string(i) + " outside the t-threshold range");
    }
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (gcd(all[a], all[b]) != 1) {
        throw Error(ErrorCode::kNonCoprimeModuli, "level primes must be pairwise coprime");
      }
    }
  }
  const CrossModuli cross = fixed_cross_moduli(structure, levels);
  return assemble(Variant::kFixed, forced.secret, forced.p0, structure, std::move(levels), cross,
                  forced.alphas);
}

BigInt reconstruct(const Parameters& params, std::span<const Share> shares,
                   std::span<const PublicEntry> public_info, std::size_t level) {
  if (level < 1 || level > params.structure.levels()) {
    throw Error(ErrorCode::kBadThreshold, "unknown level " + std::to_string(level));
  }
  std::vector<Congruence> system;
  std::vector<ParticipantId> seen;
  for (const Share& share : shares) {
    const std::size_t home = params.structure.level_of(share.participant);
    if (share.level != home || share.modulus != params.share_modulus(share.participant)) {
      throw Error(ErrorCode::kInconsistentShares,
                  "share of participant " + std::to_string(share.participant) +
                      " does not match the parameters");
    }
    if (home > level ||
        std::find(seen.begin(), seen.end(), share.participant) != seen.end()) {
      continue;
    }
    seen.push_back(share.participant);
    if (home == level) {
      system.push_back({share.value, share.modulus});
      continue;
    }
    auto entry = std::find_if(public_info.begin(), public_info.end(), [&](const PublicEntry& e) {
      return e.participant == share.participant && e.target_level == level;
    });
    if (entry == public_info.end()) {
      throw Error(ErrorCode::kDeltaMissing,
                  "no public entry for participant " + std::to_string(share.participant));
    }
    system.push_back({mod_floor(share.value + entry->delta, entry->modulus), entry->modulus});
  }
  if (system.size() < params.structure.threshold(level)) {
    throw Error(ErrorCode::kInsufficientShares,
                std::to_string(system.size()) + " usable shares, threshold " +
                    std::to_string(params.structure.threshold(level)));
  }
  const BigInt y = crt_solve(system);
  if (y >= params.levels[level - 1].upper) {
    throw Error(ErrorCode::kReconstructionOverflow, "solution exceeds the level bound");
  }
  return mod_floor(y, params.p0);
}

std::vector<ResidueInterval> feasible_intervals(const AttackTarget& target) {
  const BigInt& modulus = target.public_modulus;
  if (target.share_modulus >= modulus) return {{0, modulus - 1}};
  const BigInt lo = mod_floor(target.delta, modulus);
  const BigInt hi = lo + target.share_modulus - 1;
  if (hi < modulus) return {{lo, hi}};
  return {{lo, modulus - 1}, {0, hi - modulus}};
}

AttackInput attack_input(const Parameters& params, std::span<const Share> corrupted,
                         std::span<const PublicEntry> public_info, std::size_t level) {
  if (level < 1 || level > params.structure.levels()) {
    throw Error(ErrorCode::kBadThreshold, "unknown level " + std::to_string(level));
  }
  AttackInput input;
  input.p0 = params.p0;
  input.lower = params.levels[level - 1].lower;
  input.upper = params.levels[level - 1].upper;

  std::vector<ParticipantId> known;
  for (const Share& share : corrupted) {
    known.push_back(share.participant);
    if (share.level > level) continue;
    if (share.level == level) {
      input.corrupted.push_back({share.value, share.modulus});
      continue;
    }
    for (const PublicEntry& e : public_info) {
      if (e.participant == share.participant && e.target_level == level) {
        input.corrupted.push_back({mod_floor(share.value + e.delta, e.modulus), e.modulus});
      }
    }
  }
  for (const PublicEntry& e : public_info) {
    if (e.target_level != level ||
        std::find(known.begin(), known.end(), e.participant) != known.end()) {
      continue;
    }
    input.targets.push_back(
        {e.participant, e.delta, e.modulus, params.share_modulus(e.participant)});
  }
  std::sort(input.targets.begin(), input.targets.end(),
            [](const AttackTarget& a, const AttackTarget& b) { return a.participant < b.participant; });
  return input;
}

AttackReport attack(const AttackInput& input, std::size_t max_candidates) {
  AttackReport report;
  if (input.corrupted.empty()) {
    report.base = 0;
    report.step = 1;
  } else {
    report.base = crt_solve(input.corrupted);
    report.step = 1;
    for (const Congruence& c : input.corrupted) report.step *= c.modulus;
  }

  // base + step*K > lower and base + step*K < upper.
  const BigInt below = input.lower - report.base;
  mpz_fdiv_q(report.k_min.get_mpz_t(), below.get_mpz_t(), report.step.get_mpz_t());
  report.k_min += 1;
  if (report.k_min < 0) report.k_min = 0;
  const BigInt above = input.upper - 1 - report.base;
  mpz_fdiv_q(report.k_max.get_mpz_t(), above.get_mpz_t(), report.step.get_mpz_t());
  if (report.k_max < report.k_min) {
    throw Error(ErrorCode::kNoCandidates, "no y candidate inside the t-threshold range");
  }
  if (report.k_max - report.k_min + 1 > BigInt(static_cast<unsigned long>(max_candidates))) {
    throw Error(ErrorCode::kAttackTooLarge, "candidate range exceeds the enumeration limit");
  }

  for (const AttackTarget& target : input.targets) {
    report.intervals.push_back(feasible_intervals(target));
  }

  std::vector<BigInt> secrets;
  for (BigInt K = report.k_min; K <= report.k_max; ++K) {
    CandidateRow row;
    row.candidate = report.base + report.step * K;
    row.secret = mod_floor(row.candidate, input.p0);
    row.feasible = true;
    for (std::size_t i = 0; i < input.targets.size(); ++i) {
      const BigInt implied = mod_floor(row.candidate, input.targets[i].public_modulus);
      bool inside = false;
      for (const ResidueInterval& iv : report.intervals[i]) {
        inside = inside || (iv.lo <= implied && implied <= iv.hi);
      }
      row.implied.push_back(implied);
      row.in_range.push_back(inside);
      row.feasible = row.feasible && inside;
    }
    if (row.feasible) {
      report.survivors.push_back(row.candidate);
      secrets.push_back(row.secret);
    }
    report.rows.push_back(std::move(row));
  }
  std::sort(secrets.begin(), secrets.end());
  secrets.erase(std::unique(secrets.begin(), secrets.end()), secrets.end());
  report.secrets = std::move(secrets);
  return report;
}

std::string render_table(const AttackReport& report, const AttackInput& input) {
  std::vector<std::string> header{"candidate"};
  for (const AttackTarget& t : input.targets) {
    header.push_back("u" + std::to_string(t.participant) + " mod " + to_decimal(t.public_modulus));
  }
  header.push_back("survivor");

  std::vector<std::vector<std::string>> cells;
  for (const CandidateRow& row : report.rows) {
    std::vector<std::string> line{to_decimal(row.candidate)};
    for (std::size_t i = 0; i < row.implied.size(); ++i) {
      line.push_back(to_decimal(row.implied[i]) + (row.in_range[i] ? "*" : " "));
    }
    line.push_back(row.feasible ? "yes" : "");
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width[c])) << line[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);

  out << "intervals:";
  for (std::size_t i = 0; i < report.intervals.size(); ++i) {
    out << (i == 0 ? " " : ", ");
    for (std::size_t j = 0; j < report.intervals[i].size(); ++j) {
      const ResidueInterval& iv = report.intervals[i][j];
      out << (j == 0 ? "" : " u ") << '[' << to_decimal(iv.lo) << ',' << to_decimal(iv.hi) << ']';
    }
  }
  out << "\ncandidates: " << report.rows.size() << " of the form " << to_decimal(report.base)
      << " + " << to_decimal(report.step) << "*K, " << to_decimal(report.k_min)
      << " <= K <= " << to_decimal(report.k_max) << '\n';
  out << "survivors:";
  for (const BigInt& y : report.survivors) out << ' ' << to_decimal(y);
  out << "\nsecrets:";
  for (const BigInt& s : report.secrets) out << ' ' << to_decimal(s);
  out << '\n';
  return out.str();
}

}  // namespace mtss::hf

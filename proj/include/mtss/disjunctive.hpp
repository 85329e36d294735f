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

#include "mtss/multilevel.hpp"

namespace mtss {

// Disjunctive multilevel sharing over one anchor sequence. Each level i gets
// its own blinded value y_i = s + alpha_i * p0 < M_i with independent uniform
// alpha_i.
DealerTranscript deal(const BigInt& secret, const LevelStructure& structure,
                      const PrimeSequence& seq, Rng& rng);

DealerTranscript deal_with_alphas(const BigInt& secret, const LevelStructure& structure,
                                  const PrimeSequence& seq, const std::vector<BigInt>& alphas);

// Recovers the secret at the smallest level the coalition satisfies, using
// the first t_level usable members in ascending order. Throws kAccessDenied
// for unauthorized coalitions.
BigInt reconstruct(const Coalition& A, std::span<const MtssShare> shares,
                   const PublicTranscript& pub);

}  // namespace mtss

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

#include "mtss/multilevel.hpp"

namespace mtss {

// s = sigma_1 + ... + sigma_m (mod p0) with sigma_1..sigma_{m-1} uniform and
// sigma_m dependent; sigma_i is shared at level i exactly like a disjunctive
// level.
DealerTranscript deal_conjunctive(const BigInt& secret, const LevelStructure& structure,
                                  const PrimeSequence& seq, Rng& rng);

// Needs every level's threshold met; a member may serve several levels.
BigInt reconstruct_conjunctive(const Coalition& A, std::span<const MtssShare> shares,
                               const PublicTranscript& pub);

}  // namespace mtss

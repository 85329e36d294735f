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

#include <string>
#include <string_view>

#include "json.hpp"
#include "mtss/classic.hpp"
#include "mtss/harn_fuyou.hpp"
#include "mtss/multilevel.hpp"
#include "mtss/prime_sequence.hpp"
#include "mtss/threshold_rsa.hpp"

// Structured text documents exchanged by the CLI. Every document is a JSON
// object with keys in sorted order:
//   {"payload": {...}, "private": <bool>, "schema_version": 1,
//    "scheme": <scheme>, "type": <type>}
// Big integers are always decimal strings; small counts and indices are JSON
// integers. No floating point appears anywhere.
namespace mtss::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Scheme {
  kMignotte,
  kAsmuthBloom,
  kMtssDisjunctive,
  kMtssConjunctive,
  kHarnFuyouOriginal,
  kHarnFuyouFixed,
  kRsaMtss,
};

std::string_view to_string(Scheme scheme) noexcept;
Scheme scheme_from_string(std::string_view name);

struct Document {
  Scheme scheme = Scheme::kMtssDisjunctive;
  std::string type;
  bool is_private = false;
  Json payload = Json::object();

  bool operator==(const Document&) const = default;
};

// Byte-stable: equal documents serialize to identical text.
std::string serialize(const Document& doc);
// Throws Error(kMalformedDocument) on any syntax or schema problem.
Document parse_document(std::string_view text);

Document read_document(const std::string& path);
void write_document(const std::string& path, const Document& doc);

// Field accessors that report schema violations as kMalformedDocument.
BigInt get_integer(const Json& object, std::string_view key);
std::size_t get_count(const Json& object, std::string_view key);
const Json& get_field(const Json& object, std::string_view key);

Json encode_integer(const BigInt& value);
Json encode_integers(std::span<const BigInt> values);
std::vector<BigInt> decode_integers(const Json& array);

Json encode(const PrimeSequence& seq);
PrimeSequence decode_sequence(const Json& payload);

Json encode(const LevelStructure& structure);
LevelStructure decode_structure(const Json& payload);

Json encode(const ClassicShare& share);
ClassicShare decode_classic_share(const Json& payload);

Json encode(const MtssShare& share);
MtssShare decode_share(const Json& payload);

Json encode(const PublicDelta& delta);
PublicDelta decode_delta(const Json& payload);

// Public transcript: structure, anchor sequence and deltas. The variant is
// carried by the document's scheme field.
Json encode(const PublicTranscript& pub);
PublicTranscript decode_transcript(const Json& payload, MtssVariant variant);

Json encode(const hf::Parameters& params);
hf::Parameters decode_hf_parameters(const Json& payload, hf::Variant variant);
Json encode(const hf::Share& share);
hf::Share decode_hf_share(const Json& payload);
Json encode(const hf::PublicEntry& entry);
hf::PublicEntry decode_hf_entry(const Json& payload);
Json encode(const hf::AttackReport& report, const hf::AttackInput& input);

// Public half of a threshold-RSA setup.
struct RsaPublic {
  rsa::GroupKey key;
  LevelStructure structure;
  std::vector<BigInt> moduli;
  std::vector<PublicDelta> deltas;

  bool operator==(const RsaPublic&) const = default;
};
Json encode(const RsaPublic& pub);
RsaPublic decode_rsa_public(const Json& payload);

Json encode(const rsa::PartialSignature& part);
rsa::PartialSignature decode_partial(const Json& payload);

}  // namespace mtss::io

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

#include "mtss/documents.hpp"

#include <fstream>
#include <sstream>

#include "mtss/errors.hpp"

namespace mtss::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

const Json& require_object(const Json& value, std::string_view what) {
  if (!value.is_object()) malformed(std::string(what) + " must be an object");
  return value;
}

const Json& require_array(const Json& value, std::string_view what) {
  if (!value.is_array()) malformed(std::string(what) + " must be an array");
  return value;
}

std::vector<std::size_t> decode_counts(const Json& array, std::string_view what) {
  require_array(array, what);
  std::vector<std::size_t> out;
  for (const Json& v : array) {
    if (!v.is_number_unsigned()) malformed(std::string(what) + " must hold non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::kMignotte: return "mignotte";
    case Scheme::kAsmuthBloom: return "asmuth_bloom";
    case Scheme::kMtssDisjunctive: return "mtss_disjunctive";
    case Scheme::kMtssConjunctive: return "mtss_conjunctive";
    case Scheme::kHarnFuyouOriginal: return "harn_fuyou_original";
    case Scheme::kHarnFuyouFixed: return "harn_fuyou_fixed";
    case Scheme::kRsaMtss: return "rsa_mtss";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  for (Scheme s : {Scheme::kMignotte, Scheme::kAsmuthBloom, Scheme::kMtssDisjunctive,
                   Scheme::kMtssConjunctive, Scheme::kHarnFuyouOriginal, Scheme::kHarnFuyouFixed,
                   Scheme::kRsaMtss}) {
    if (to_string(s) == name) return s;
  }
  malformed("unknown scheme '" + std::string(name) + "'");
}

std::string serialize(const Document& doc) {
  Json envelope = Json::object();
  envelope["schema_version"] = kSchemaVersion;
  envelope["scheme"] = std::string(to_string(doc.scheme));
  envelope["type"] = doc.type;
  envelope["private"] = doc.is_private;
  envelope["payload"] = doc.payload;
  return envelope.dump(2) + "\n";
}

Document parse_document(std::string_view text) {
  Json envelope;
  try {
    envelope = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  require_object(envelope, "document");
  const Json& version = get_field(envelope, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    malformed("unsupported schema_version");
  }
  const Json& scheme = get_field(envelope, "scheme");
  const Json& type = get_field(envelope, "type");
  const Json& is_private = get_field(envelope, "private");
  if (!scheme.is_string() || !type.is_string() || !is_private.is_boolean()) {
    malformed("document envelope has wrongly typed fields");
  }
  Document doc;
  doc.scheme = scheme_from_string(scheme.get<std::string>());
  doc.type = type.get<std::string>();
  doc.is_private = is_private.get<bool>();
  doc.payload = require_object(get_field(envelope, "payload"), "payload");
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) malformed("cannot write " + path);
  out << serialize(doc);
}

const Json& get_field(const Json& object, std::string_view key) {
  require_object(object, "container");
  auto it = object.find(std::string(key));
  if (it == object.end()) malformed("missing field '" + std::string(key) + "'");
  return *it;
}

BigInt get_integer(const Json& object, std::string_view key) {
  const Json& v = get_field(object, key);
  if (!v.is_string()) malformed("field '" + std::string(key) + "' must be a decimal string");
  return parse_decimal(v.get<std::string>());
}

std::size_t get_count(const Json& object, std::string_view key) {
  const Json& v = get_field(object, key);
  if (!v.is_number_unsigned()) {
    malformed("field '" + std::string(key) + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json encode_integer(const BigInt& value) { return to_decimal(value); }

Json encode_integers(std::span<const BigInt> values) {
  Json out = Json::array();
  for (const BigInt& v : values) out.push_back(to_decimal(v));
  return out;
}

std::vector<BigInt> decode_integers(const Json& array) {
  require_array(array, "integer list");
  std::vector<BigInt> out;
  for (const Json& v : array) {
    if (!v.is_string()) malformed("integer list entries must be decimal strings");
    out.push_back(parse_decimal(v.get<std::string>()));
  }
  return out;
}

Json encode(const PrimeSequence& seq) {
  Json out = Json::object();
  out["p0"] = encode_integer(seq.p0());
  out["primes"] = encode_integers(seq.primes());
  if (seq.kind()) {
    out["kind"] = {{"condition", std::string(to_string(seq.kind()->condition))},
                   {"threshold", seq.kind()->threshold}};
  } else {
    out["kind"] = nullptr;
  }
  return out;
}

PrimeSequence decode_sequence(const Json& payload) {
  std::optional<SequenceKind> kind;
  auto it = payload.find("kind");
  if (it != payload.end() && !it->is_null()) {
    const Json& condition = get_field(*it, "condition");
    if (!condition.is_string()) malformed("kind.condition must be a string");
    auto parsed = condition_kind_from_string(condition.get<std::string>());
    if (!parsed) malformed("unknown condition '" + condition.get<std::string>() + "'");
    kind = SequenceKind{*parsed, get_count(*it, "threshold")};
  }
  return PrimeSequence(get_integer(payload, "p0"), decode_integers(get_field(payload, "primes")),
                       kind);
}

Json encode(const LevelStructure& structure) {
  return {{"sizes", structure.sizes()},
          {"thresholds", structure.thresholds()},
          {"assignment", structure.assignment()}};
}

LevelStructure decode_structure(const Json& payload) {
  return LevelStructure(decode_counts(get_field(payload, "sizes"), "sizes"),
                        decode_counts(get_field(payload, "thresholds"), "thresholds"),
                        decode_counts(get_field(payload, "assignment"), "assignment"));
}

Json encode(const ClassicShare& share) {
  return {{"participant", share.participant},
          {"modulus", encode_integer(share.modulus)},
          {"value", encode_integer(share.value)}};
}

ClassicShare decode_classic_share(const Json& payload) {
  return {get_count(payload, "participant"), get_integer(payload, "modulus"),
          get_integer(payload, "value")};
}

Json encode(const MtssShare& share) {
  return {{"participant", share.participant},
          {"level", share.level},
          {"modulus", encode_integer(share.modulus)},
          {"value", encode_integer(share.value)}};
}

MtssShare decode_share(const Json& payload) {
  return {get_count(payload, "participant"), get_count(payload, "level"),
          get_integer(payload, "modulus"), get_integer(payload, "value")};
}

Json encode(const PublicDelta& delta) {
  return {{"participant", delta.participant},
          {"level", delta.level},
          {"value", encode_integer(delta.value)}};
}

PublicDelta decode_delta(const Json& payload) {
  return {get_count(payload, "participant"), get_count(payload, "level"),
          get_integer(payload, "value")};
}

namespace {

Json encode_deltas(std::span<const PublicDelta> deltas) {
  Json out = Json::array();
  for (const PublicDelta& d : deltas) out.push_back(encode(d));
  return out;
}

std::vector<PublicDelta> decode_deltas(const Json& array) {
  require_array(array, "deltas");
  std::vector<PublicDelta> out;
  for (const Json& d : array) out.push_back(decode_delta(d));
  return out;
}

}  // namespace

Json encode(const PublicTranscript& pub) {
  return {{"structure", encode(pub.structure)},
          {"sequence", encode(pub.sequence)},
          {"deltas", encode_deltas(pub.deltas)}};
}

PublicTranscript decode_transcript(const Json& payload, MtssVariant variant) {
  return PublicTranscript{variant, decode_structure(get_field(payload, "structure")),
                          decode_sequence(get_field(payload, "sequence")),
                          decode_deltas(get_field(payload, "deltas"))};
}

Json encode(const hf::Parameters& params) {
  Json levels = Json::array();
  for (const hf::Level& level : params.levels) {
    levels.push_back({{"primes", encode_integers(level.primes)},
                      {"lower", encode_integer(level.lower)},
                      {"upper", encode_integer(level.upper)}});
  }
  return {{"p0", encode_integer(params.p0)},
          {"structure", encode(params.structure)},
          {"levels", std::move(levels)}};
}

hf::Parameters decode_hf_parameters(const Json& payload, hf::Variant variant) {
  hf::Parameters params{variant, get_integer(payload, "p0"),
                        decode_structure(get_field(payload, "structure")), {}};
  const Json& levels = require_array(get_field(payload, "levels"), "levels");
  for (const Json& level : levels) {
    params.levels.push_back({decode_integers(get_field(level, "primes")),
                             get_integer(level, "lower"), get_integer(level, "upper")});
  }
  if (params.levels.size() != params.structure.levels()) malformed("one entry per level required");
  for (std::size_t i = 0; i < params.levels.size(); ++i) {
    if (params.levels[i].primes.size() < params.structure.size(i + 1)) {
      malformed("level " + std::to_string(i + 1) + " lists too few primes");
    }
  }
  return params;
}

Json encode(const hf::Share& share) {
  return {{"participant", share.participant},
          {"level", share.level},
          {"modulus", encode_integer(share.modulus)},
          {"value", encode_integer(share.value)}};
}

hf::Share decode_hf_share(const Json& payload) {
  return {get_count(payload, "participant"), get_count(payload, "level"),
          get_integer(payload, "modulus"), get_integer(payload, "value")};
}

Json encode(const hf::PublicEntry& entry) {
  return {{"participant", entry.participant},
          {"target_level", entry.target_level},
          {"delta", encode_integer(entry.delta)},
          {"modulus", encode_integer(entry.modulus)}};
}

hf::PublicEntry decode_hf_entry(const Json& payload) {
  return {get_count(payload, "participant"), get_count(payload, "target_level"),
          get_integer(payload, "delta"), get_integer(payload, "modulus")};
}

Json encode(const hf::AttackReport& report, const hf::AttackInput& input) {
  Json targets = Json::array();
  for (std::size_t i = 0; i < input.targets.size(); ++i) {
    const hf::AttackTarget& t = input.targets[i];
    Json intervals = Json::array();
    for (const hf::ResidueInterval& iv : report.intervals[i]) {
      intervals.push_back(encode_integers(std::vector<BigInt>{iv.lo, iv.hi}));
    }
    targets.push_back({{"participant", t.participant},
                       {"delta", encode_integer(t.delta)},
                       {"public_modulus", encode_integer(t.public_modulus)},
                       {"share_modulus", encode_integer(t.share_modulus)},
                       {"intervals", std::move(intervals)}});
  }
  Json rows = Json::array();
  for (const hf::CandidateRow& row : report.rows) {
    rows.push_back({{"candidate", encode_integer(row.candidate)},
                    {"implied", encode_integers(row.implied)},
                    {"in_range", row.in_range},
                    {"feasible", row.feasible},
                    {"secret", encode_integer(row.secret)}});
  }
  return {{"base", encode_integer(report.base)},
          {"step", encode_integer(report.step)},
          {"k_min", encode_integer(report.k_min)},
          {"k_max", encode_integer(report.k_max)},
          {"lower", encode_integer(input.lower)},
          {"upper", encode_integer(input.upper)},
          {"targets", std::move(targets)},
          {"rows", std::move(rows)},
          {"survivors", encode_integers(report.survivors)},
          {"secrets", encode_integers(report.secrets)}};
}

Json encode(const RsaPublic& pub) {
  return {{"n", encode_integer(pub.key.n)},
          {"e", encode_integer(pub.key.e)},
          {"structure", encode(pub.structure)},
          {"moduli", encode_integers(pub.moduli)},
          {"deltas", encode_deltas(pub.deltas)}};
}

RsaPublic decode_rsa_public(const Json& payload) {
  RsaPublic pub{{get_integer(payload, "n"), get_integer(payload, "e")},
                decode_structure(get_field(payload, "structure")),
                decode_integers(get_field(payload, "moduli")),
                decode_deltas(get_field(payload, "deltas"))};
  if (pub.moduli.size() != pub.structure.participants()) {
    malformed("one modulus per participant required");
  }
  return pub;
}

Json encode(const rsa::PartialSignature& part) {
  return {{"participant", part.participant},
          {"value", encode_integer(part.value)},
          {"context", part.context}};
}

rsa::PartialSignature decode_partial(const Json& payload) {
  const Json& context = get_field(payload, "context");
  if (!context.is_string()) malformed("context must be a string");
  return {get_count(payload, "participant"), get_integer(payload, "value"),
          context.get<std::string>()};
}

}  // namespace mtss::io

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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtss/classic.hpp"
#include "mtss/cli.hpp"
#include "mtss/conjunctive.hpp"
#include "mtss/disjunctive.hpp"
#include "mtss/documents.hpp"
#include "mtss/errors.hpp"
#include "mtss/harn_fuyou.hpp"
#include "mtss/number_theory.hpp"
#include "mtss/threshold_rsa.hpp"

namespace mtss::cli {

namespace {

namespace fs = std::filesystem;
using io::Document;
using io::Json;
using io::Scheme;

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

BigInt big(const std::string& text, std::string_view flag) {
  if (text.empty()) bad_input(std::string(flag) + " is required");
  return parse_decimal(text);
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
  if (!seed) bad_input("--seed is required for randomized commands");
  return *seed;
}

Coalition parse_coalition(const std::vector<std::size_t>& members) {
  return Coalition(members.begin(), members.end());
}

void emit(std::ostream& out, const std::string& path, const Document& doc) {
  if (path.empty()) {
    out << io::serialize(doc);
  } else {
    io::write_document(path, doc);
  }
}

fs::path prepare_dir(const std::string& dir) {
  if (dir.empty()) bad_input("--out directory is required");
  fs::create_directories(dir);
  return fs::path(dir);
}

std::string share_file(const fs::path& dir, ParticipantId k) {
  return (dir / ("share-" + std::to_string(k) + ".json")).string();
}

Document doc(Scheme scheme, std::string type, Json payload, bool is_private = false) {
  return Document{scheme, std::move(type), is_private, std::move(payload)};
}

void expect(const Document& d, std::string_view type) {
  if (d.type != type) {
    bad_input("expected a '" + std::string(type) + "' document, got '" + d.type + "'");
  }
}

std::vector<Document> read_all(const std::vector<std::string>& paths) {
  std::vector<Document> out;
  for (const std::string& p : paths) out.push_back(io::read_document(p));
  return out;
}

Json error_json(std::string_view code, const std::string& message) {
  return {{"schema_version", io::kSchemaVersion},
          {"type", "error"},
          {"error", std::string(code)},
          {"message", message}};
}

// --- options ----------------------------------------------------------------

struct Options {
  std::optional<std::uint64_t> seed;
  std::string in;
  std::string out;
  std::string scheme;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> thresholds;
  std::string p0;
  std::string secret;
  std::string sequence;
  std::vector<std::string> primes;
  std::size_t n = 0;
  std::size_t threshold = 0;
  std::string kind;
  std::string public_path;
  std::vector<std::string> shares;
  std::vector<std::size_t> coalition;
  std::size_t level = 0;
  std::string format = "text";
  bool example2 = false;
  unsigned bits = 0;
  std::string p_prime;
  std::string q_prime;
  std::string e = "65537";
  std::string share;
  std::size_t participant = 0;
  std::string msg;
  std::vector<std::string> partials;
  std::vector<std::string> public_parts;
  std::string signature;
};

// --- sequences ----------------------------------------------------------------

int cmd_seq_gen(const Options& o, std::ostream& out) {
  const BigInt p0 = big(o.p0, "--p0");
  if (o.n == 0) bad_input("--n must be positive");
  Rng rng(require_seed(o.seed));
  const std::string kind = o.kind.empty() ? "anchor" : o.kind;
  if (kind == "anchor") {
    emit(out, o.out, doc(Scheme::kAsmuthBloom, "sequence", io::encode(generate_anchor_sequence(p0, o.n))));
  } else if (kind == "classic") {
    emit(out, o.out,
         doc(Scheme::kHarnFuyouFixed, "sequence",
             io::encode(generate_hf_sequence(p0, o.n, o.threshold, rng))));
  } else {
    bad_input("--kind must be anchor or classic");
  }
  return kExitOk;
}

int cmd_seq_check(const Options& o, std::ostream& out) {
  std::optional<PrimeSequence> seq;
  if (!o.in.empty()) {
    const Document d = io::read_document(o.in);
    expect(d, "sequence");
    seq = io::decode_sequence(d.payload);
  } else {
    std::vector<BigInt> primes;
    for (const std::string& p : o.primes) primes.push_back(big(p, "--primes"));
    seq = PrimeSequence(o.p0.empty() ? BigInt(1) : big(o.p0, "--p0"), std::move(primes));
  }
  const auto kind = condition_kind_from_string(o.kind);
  if (!kind) bad_input("--kind must be mignotte, classic, statistical or anchor");
  const ConditionSides sides = condition_sides(*seq, o.threshold, *kind);
  const bool holds = sides.lhs < sides.rhs;
  Json payload = {{"condition", std::string(to_string(*kind))},
                  {"threshold", *kind == ConditionKind::kAnchor ? anchor_threshold(seq->size())
                                                                  : o.threshold},
                  {"lhs", io::encode_integer(sides.lhs)},
                  {"rhs", io::encode_integer(sides.rhs)},
                  {"holds", holds}};
  if (!holds) payload["error"] = std::string(to_string(ErrorCode::kConditionViolated));
  emit(out, o.out, doc(Scheme::kAsmuthBloom, "condition_check", std::move(payload)));
  return holds ? kExitOk : kExitDomainError;
}

// --- deal / reconstruct -------------------------------------------------------

PrimeSequence sequence_for(const Options& o, const BigInt& p0, std::size_t n) {
  if (!o.sequence.empty()) {
    const Document d = io::read_document(o.sequence);
    expect(d, "sequence");
    return io::decode_sequence(d.payload);
  }
  return generate_anchor_sequence(p0, n);
}

int cmd_deal(const Options& o, std::ostream& out) {
  const Scheme scheme = io::scheme_from_string(o.scheme);
  const fs::path dir = prepare_dir(o.out);
  std::vector<std::string> written;

  if (scheme == Scheme::kMignotte || scheme == Scheme::kAsmuthBloom) {
    if (o.thresholds.size() != 1) bad_input("--thresholds takes one value for classic schemes");
    const std::size_t t = o.thresholds.front();
    std::optional<PrimeSequence> seq;
    std::vector<ClassicShare> shares;
    if (scheme == Scheme::kMignotte) {
      if (!o.sequence.empty()) {
        seq = sequence_for(o, 1, 0);
      } else {
        std::vector<BigInt> primes;
        for (const std::string& p : o.primes) primes.push_back(big(p, "--primes"));
        seq = PrimeSequence(1, std::move(primes));
      }
      shares = mignotte_share(big(o.secret, "--secret"), *seq, t);
    } else {
      const BigInt p0 = big(o.p0, "--p0");
      if (o.sizes.size() != 1) bad_input("--level-sizes takes one value for classic schemes");
      Rng rng(require_seed(o.seed));
      seq = sequence_for(o, p0, o.sizes.front());
      shares = ab_share(big(o.secret, "--secret"), *seq, t, rng).shares;
    }
    const std::string pub = (dir / "public.json").string();
    io::write_document(pub, doc(scheme, "public", {{"sequence", io::encode(*seq)},
                                                   {"threshold", t}}));
    written.push_back(pub);
    for (const ClassicShare& s : shares) {
      written.push_back(share_file(dir, s.participant));
      io::write_document(written.back(), doc(scheme, "share", io::encode(s), true));
    }
  } else if (scheme == Scheme::kMtssDisjunctive || scheme == Scheme::kMtssConjunctive) {
    const LevelStructure structure(o.sizes, o.thresholds);
    const BigInt p0 = big(o.p0, "--p0");
    Rng rng(require_seed(o.seed));
    const PrimeSequence seq = sequence_for(o, p0, structure.participants());
    const BigInt secret = big(o.secret, "--secret");
    const DealerTranscript transcript = scheme == Scheme::kMtssDisjunctive
                                            ? deal(secret, structure, seq, rng)
                                            : deal_conjunctive(secret, structure, seq, rng);
    const std::string pub = (dir / "public.json").string();
    io::write_document(pub, doc(scheme, "transcript", io::encode(transcript.pub)));
    written.push_back(pub);
    for (const MtssShare& s : transcript.shares) {
      written.push_back(share_file(dir, s.participant));
      io::write_document(written.back(), doc(scheme, "share", io::encode(s), true));
    }
  } else {
    bad_input("deal supports mignotte, asmuth_bloom, mtss_disjunctive and mtss_conjunctive");
  }
  for (const std::string& path : written) out << path << '\n';
  return kExitOk;
}

hf::Variant hf_variant(Scheme scheme) {
  if (scheme == Scheme::kHarnFuyouOriginal) return hf::Variant::kOriginal;
  if (scheme == Scheme::kHarnFuyouFixed) return hf::Variant::kFixed;
  bad_input("not a Harn-Fuyou document");
}

struct HfPublic {
  hf::Parameters params;
  std::vector<hf::PublicEntry> entries;
};

HfPublic read_hf_public(const std::string& path) {
  const Document d = io::read_document(path);
  expect(d, "transcript");
  HfPublic pub{io::decode_hf_parameters(d.payload, hf_variant(d.scheme)), {}};
  for (const Json& e : io::get_field(d.payload, "public_info")) {
    pub.entries.push_back(io::decode_hf_entry(e));
  }
  return pub;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  if (o.public_path.empty()) bad_input("--public is required");
  const Document pub_doc = io::read_document(o.public_path);
  const std::vector<Document> share_docs = read_all(o.shares);
  for (const Document& d : share_docs) {
    expect(d, "share");
    if (d.scheme != pub_doc.scheme) bad_input("share scheme does not match the public document");
  }

  BigInt secret;
  switch (pub_doc.scheme) {
    case Scheme::kMignotte:
    case Scheme::kAsmuthBloom: {
      expect(pub_doc, "public");
      const PrimeSequence seq = io::decode_sequence(io::get_field(pub_doc.payload, "sequence"));
      const std::size_t t = io::get_count(pub_doc.payload, "threshold");
      std::vector<ClassicShare> shares;
      for (const Document& d : share_docs) shares.push_back(io::decode_classic_share(d.payload));
      secret = pub_doc.scheme == Scheme::kMignotte ? mignotte_reconstruct(shares, seq, t)
                                                   : ab_reconstruct(shares, seq, t);
      break;
    }
    case Scheme::kMtssDisjunctive:
    case Scheme::kMtssConjunctive: {
      expect(pub_doc, "transcript");
      const MtssVariant variant = pub_doc.scheme == Scheme::kMtssDisjunctive
                                      ? MtssVariant::kDisjunctive
                                      : MtssVariant::kConjunctive;
      const PublicTranscript pub = io::decode_transcript(pub_doc.payload, variant);
      std::vector<MtssShare> shares;
      for (const Document& d : share_docs) shares.push_back(io::decode_share(d.payload));
      Coalition A = parse_coalition(o.coalition);
      if (A.empty()) {
        for (const MtssShare& s : shares) A.insert(s.participant);
      }
      secret = variant == MtssVariant::kDisjunctive ? reconstruct(A, shares, pub)
                                                    : reconstruct_conjunctive(A, shares, pub);
      break;
    }
    case Scheme::kHarnFuyouOriginal:
    case Scheme::kHarnFuyouFixed: {
      const HfPublic pub = read_hf_public(o.public_path);
      if (o.level == 0) bad_input("--level is required for Harn-Fuyou reconstruction");
      std::vector<hf::Share> shares;
      for (const Document& d : share_docs) shares.push_back(io::decode_hf_share(d.payload));
      secret = hf::reconstruct(pub.params, shares, pub.entries, o.level);
      break;
    }
    case Scheme::kRsaMtss:
      bad_input("threshold-RSA shares are used through the rsa-* commands");
  }
  emit(out, o.out, doc(pub_doc.scheme, "secret", {{"secret", io::encode_integer(secret)}}));
  return kExitOk;
}

// --- Harn-Fuyou ----------------------------------------------------------------

Json hf_public_payload(const hf::Deal& dealt) {
  Json payload = io::encode(dealt.params);
  Json entries = Json::array();
  for (const hf::PublicEntry& e : dealt.public_info) entries.push_back(io::encode(e));
  payload["public_info"] = std::move(entries);
  return payload;
}

int cmd_hf_deal(const Options& o, std::ostream& out) {
  hf::Deal dealt = [&] {
    if (o.example2) {
      return hf::deal_fixed_forced(hf::example2_structure(), hf::example2_parameters());
    }
    const LevelStructure structure(o.sizes, o.thresholds);
    const BigInt p0 = big(o.p0, "--p0");
    const BigInt secret = big(o.secret, "--secret");
    Rng rng(require_seed(o.seed));
    const Scheme scheme = io::scheme_from_string(o.scheme.empty() ? "harn_fuyou_fixed" : o.scheme);
    return hf_variant(scheme) == hf::Variant::kOriginal
               ? hf::deal_original(secret, p0, structure, rng)
               : hf::deal_fixed(secret, p0, structure, rng);
  }();
  const Scheme scheme = dealt.params.variant == hf::Variant::kOriginal
                            ? Scheme::kHarnFuyouOriginal
                            : Scheme::kHarnFuyouFixed;
  const fs::path dir = prepare_dir(o.out);
  const std::string pub = (dir / "public.json").string();
  io::write_document(pub, doc(scheme, "transcript", hf_public_payload(dealt)));
  out << pub << '\n';
  for (const hf::Share& s : dealt.shares) {
    const std::string path = share_file(dir, s.participant);
    io::write_document(path, doc(scheme, "share", io::encode(s), true));
    out << path << '\n';
  }
  return kExitOk;
}

int cmd_hf_attack(const Options& o, std::ostream& out) {
  if (o.public_path.empty()) bad_input("--public is required");
  if (o.level == 0) bad_input("--level is required");
  const HfPublic pub = read_hf_public(o.public_path);
  std::vector<hf::Share> corrupted;
  for (const Document& d : read_all(o.shares)) {
    expect(d, "share");
    corrupted.push_back(io::decode_hf_share(d.payload));
  }
  const hf::AttackInput input = hf::attack_input(pub.params, corrupted, pub.entries, o.level);
  const hf::AttackReport report = hf::attack(input);
  if (o.format == "json") {
    const Scheme scheme = pub.params.variant == hf::Variant::kOriginal
                              ? Scheme::kHarnFuyouOriginal
                              : Scheme::kHarnFuyouFixed;
    emit(out, o.out, doc(scheme, "attack_report", io::encode(report, input)));
  } else {
    out << hf::render_table(report, input);
  }
  return kExitOk;
}

// Forced Example 2 transcript, two corrupted level-2 members, public data of
// the four level-1 members.
int cmd_demo_example2(const Options& o, std::ostream& out) {
  const hf::Deal dealt =
      hf::deal_fixed_forced(hf::example2_structure(), hf::example2_parameters());
  const std::vector<hf::Share> corrupted(dealt.shares.begin() + 4, dealt.shares.end());
  const hf::AttackInput input = hf::attack_input(dealt.params, corrupted, dealt.public_info, 2);
  const hf::AttackReport report = hf::attack(input);
  const BigInt recovered = hf::reconstruct(dealt.params, {dealt.shares.data(), 2},
                                           dealt.public_info, 1);

  if (o.format == "json") {
    Json shares = Json::array();
    for (const hf::Share& s : dealt.shares) shares.push_back(io::encode(s));
    Json entries = Json::array();
    for (const hf::PublicEntry& e : dealt.public_info) entries.push_back(io::encode(e));
    Json payload = {{"p0", io::encode_integer(dealt.params.p0)},
                    {"blinded", io::encode_integers(dealt.dealer.blinded)},
                    {"shares", std::move(shares)},
                    {"public_info", std::move(entries)},
                    {"attack", io::encode(report, input)},
                    {"level1_reconstruction", io::encode_integer(recovered)}};
    emit(out, o.out, doc(Scheme::kHarnFuyouFixed, "example2_report", std::move(payload)));
    return kExitOk;
  }

  out << "p0 = " << dealt.params.p0 << ", secret = " << hf::example2_parameters().secret << '\n';
  for (std::size_t i = 0; i < dealt.dealer.blinded.size(); ++i) {
    out << "y_" << i + 1 << " = " << dealt.dealer.blinded[i] << '\n';
  }
  out << "shares:";
  for (const hf::Share& s : dealt.shares) {
    out << " u" << s.participant << "=" << s.value << " (mod " << s.modulus << ")";
  }
  out << "\npublic info:";
  for (const hf::PublicEntry& e : dealt.public_info) {
    out << " u" << e.participant << "->L" << e.target_level << ": " << e.delta << " (mod "
        << e.modulus << ")";
  }
  out << "\nlevel-1 reconstruction by u1,u2: " << recovered << "\n\n";
  out << "adversary holds u5, u6; candidates for y_2:\n";
  out << hf::render_table(report, input);
  return kExitOk;
}

// --- threshold RSA -----------------------------------------------------------

io::RsaPublic read_rsa_public(const std::string& path) {
  if (path.empty()) bad_input("--public is required");
  const Document d = io::read_document(path);
  expect(d, "public_key");
  return io::decode_rsa_public(d.payload);
}

rsa::CoalitionContext context_for(const Options& o, const io::RsaPublic& pub) {
  const Coalition A = parse_coalition(o.coalition);
  if (A.empty()) bad_input("--coalition is required");
  return o.level == 0 ? rsa::CoalitionContext::make(A, pub.structure, pub.moduli)
                      : rsa::CoalitionContext::make(A, pub.structure, pub.moduli, o.level);
}

int cmd_rsa_setup(const Options& o, std::ostream& out) {
  const LevelStructure structure(o.sizes, o.thresholds);
  Rng rng(require_seed(o.seed));
  const BigInt e = big(o.e, "--e");
  const rsa::Setup setup =
      !o.p_prime.empty() || !o.q_prime.empty()
          ? rsa::setup_from_primes(big(o.p_prime, "--p-prime"), big(o.q_prime, "--q-prime"), e,
                                   structure, rng)
          : rsa::setup(o.bits, e, structure, rng);
  const fs::path dir = prepare_dir(o.out);
  const std::string pub = (dir / "public.json").string();
  io::write_document(pub, doc(Scheme::kRsaMtss, "public_key",
                              io::encode(io::RsaPublic{setup.key, setup.structure, setup.moduli,
                                                       setup.deltas})));
  out << pub << '\n';
  for (const MtssShare& s : setup.shares) {
    const std::string path = share_file(dir, s.participant);
    io::write_document(path, doc(Scheme::kRsaMtss, "share", io::encode(s), true));
    out << path << '\n';
  }
  return kExitOk;
}

int cmd_rsa_sign_partial(const Options& o, std::ostream& out) {
  const io::RsaPublic pub = read_rsa_public(o.public_path);
  const rsa::CoalitionContext ctx = context_for(o, pub);
  const Document share_doc = io::read_document(o.share);
  expect(share_doc, "share");
  const MtssShare share = io::decode_share(share_doc.payload);
  const rsa::PartialSignature part = rsa::partial_sign(big(o.msg, "--msg"), share, ctx, pub.key);
  emit(out, o.out, doc(Scheme::kRsaMtss, "partial_signature", io::encode(part)));
  return kExitOk;
}

int cmd_rsa_public_part(const Options& o, std::ostream& out) {
  const io::RsaPublic pub = read_rsa_public(o.public_path);
  const rsa::CoalitionContext ctx = context_for(o, pub);
  const rsa::PartialSignature part = rsa::public_part(big(o.msg, "--msg"), o.participant,
                                                      pub.structure, pub.deltas, ctx, pub.key);
  emit(out, o.out, doc(Scheme::kRsaMtss, "public_part", io::encode(part)));
  return kExitOk;
}

int cmd_rsa_combine(const Options& o, std::ostream& out) {
  const io::RsaPublic pub = read_rsa_public(o.public_path);
  const rsa::CoalitionContext ctx = context_for(o, pub);
  std::vector<rsa::PartialSignature> partials;
  for (const Document& d : read_all(o.partials)) {
    expect(d, "partial_signature");
    partials.push_back(io::decode_partial(d.payload));
  }
  std::vector<rsa::PartialSignature> public_parts;
  for (const Document& d : read_all(o.public_parts)) {
    expect(d, "public_part");
    public_parts.push_back(io::decode_partial(d.payload));
  }
  // The server side is computable from public data; fill in any part not supplied.
  for (const rsa::CoalitionMember& member : ctx.members()) {
    const bool given = std::any_of(public_parts.begin(), public_parts.end(),
                                   [&](const auto& p) { return p.participant == member.participant; });
    if (!given) {
      public_parts.push_back(rsa::public_part(big(o.msg, "--msg"), member.participant,
                                              pub.structure, pub.deltas, ctx, pub.key));
    }
  }
  const rsa::Signature sig =
      rsa::combine(partials, public_parts, big(o.msg, "--msg"), ctx, pub.key);
  emit(out, o.out,
       doc(Scheme::kRsaMtss, "signature",
           {{"signature", io::encode_integer(sig.value)},
            {"correction", sig.correction},
            {"context", ctx.id()}}));
  return kExitOk;
}

int cmd_rsa_verify(const Options& o, std::ostream& out) {
  const io::RsaPublic pub = read_rsa_public(o.public_path);
  if (o.signature.empty()) bad_input("--signature is required");
  BigInt signature;
  if (o.signature.find_first_not_of("0123456789") == std::string::npos) {
    signature = parse_decimal(o.signature);
  } else {
    const Document d = io::read_document(o.signature);
    expect(d, "signature");
    signature = io::get_integer(d.payload, "signature");
  }
  const bool valid = rsa::verify(big(o.msg, "--msg"), signature, pub.key);
  Json payload = {{"valid", valid}};
  if (!valid) payload["error"] = std::string(to_string(ErrorCode::kInvalidSignature));
  emit(out, o.out, doc(Scheme::kRsaMtss, "verification", std::move(payload)));
  return valid ? kExitOk : kExitDomainError;
}

bool is_malformed(ErrorCode code) {
  return code == ErrorCode::kMalformedDocument || code == ErrorCode::kInvalidStructure ||
         code == ErrorCode::kInvalidSequence;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilevel CRT threshold secret sharing toolkit", "mtss"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed (u64)"); };
  auto add_structure = [&](CLI::App* sub) {
    sub->add_option("--level-sizes", o.sizes, "participants per level, e.g. 2,3")->delimiter(',');
    sub->add_option("--thresholds", o.thresholds, "threshold per level, e.g. 2,3")->delimiter(',');
  };
  auto add_out = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--out", o.out, what);
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;

  auto* seq_gen = app.add_subcommand("seq-gen", "generate an anchor or classic prime sequence");
  seq_gen->add_option("--p0", o.p0, "secret-space modulus")->required();
  seq_gen->add_option("--n", o.n, "number of primes")->required();
  seq_gen->add_option("--kind", o.kind, "anchor (default) or classic");
  seq_gen->add_option("--threshold", o.threshold, "threshold for --kind classic");
  add_seed(seq_gen);
  add_out(seq_gen, "output file (default stdout)");
  handlers[seq_gen] = cmd_seq_gen;

  auto* seq_check = app.add_subcommand("seq-check", "evaluate a sequence inequality exactly");
  seq_check->add_option("--in", o.in, "sequence document");
  seq_check->add_option("--p0", o.p0, "p0 when primes are given inline");
  seq_check->add_option("--primes", o.primes, "primes, e.g. 11,13,17,23")->delimiter(',');
  seq_check->add_option("--threshold", o.threshold, "threshold t");
  seq_check->add_option("--kind", o.kind, "mignotte, classic, statistical or anchor")->required();
  add_out(seq_check, "output file (default stdout)");
  handlers[seq_check] = cmd_seq_check;

  auto* deal_cmd = app.add_subcommand("deal", "share a secret; writes public.json and share-<k>.json");
  deal_cmd->add_option("--scheme", o.scheme, "mignotte, asmuth_bloom, mtss_disjunctive, mtss_conjunctive")
      ->required();
  add_structure(deal_cmd);
  deal_cmd->add_option("--p0", o.p0, "secret-space modulus");
  deal_cmd->add_option("--secret", o.secret, "secret value")->required();
  deal_cmd->add_option("--sequence", o.sequence, "use this sequence document instead of generating");
  deal_cmd->add_option("--primes", o.primes, "Mignotte moduli")->delimiter(',');
  add_seed(deal_cmd);
  add_out(deal_cmd, "output directory");
  handlers[deal_cmd] = cmd_deal;

  auto* rec = app.add_subcommand("reconstruct", "recover a secret from share documents");
  rec->add_option("--public", o.public_path, "public document")->required();
  rec->add_option("--shares", o.shares, "share documents")->required();
  rec->add_option("--coalition", o.coalition, "coalition members (default: share holders)")
      ->delimiter(',');
  rec->add_option("--level", o.level, "target level (Harn-Fuyou)");
  add_out(rec, "output file (default stdout)");
  handlers[rec] = cmd_reconstruct;

  auto* hf_deal = app.add_subcommand("hf-deal", "deal with the Harn-Fuyou scheme");
  hf_deal->add_option("--scheme", o.scheme, "harn_fuyou_original or harn_fuyou_fixed (default)");
  add_structure(hf_deal);
  hf_deal->add_option("--p0", o.p0, "secret-space modulus");
  hf_deal->add_option("--secret", o.secret, "secret value");
  hf_deal->add_flag("--example2", o.example2, "use the fixed Example 2 parameters");
  add_seed(hf_deal);
  add_out(hf_deal, "output directory");
  handlers[hf_deal] = cmd_hf_deal;

  auto* hf_attack = app.add_subcommand("hf-attack", "run the public-information attack");
  hf_attack->add_option("--public", o.public_path, "Harn-Fuyou public document")->required();
  hf_attack->add_option("--corrupt", o.shares, "corrupted share documents")->required();
  hf_attack->add_option("--level", o.level, "attacked level")->required();
  hf_attack->add_option("--format", o.format, "text (default) or json");
  add_out(hf_attack, "output file for --format json");
  handlers[hf_attack] = cmd_hf_attack;

  auto* rsa_setup = app.add_subcommand("rsa-setup", "create a shared RSA key");
  rsa_setup->add_option("--bits", o.bits, "modulus size in bits (16..512)");
  rsa_setup->add_option("--p-prime", o.p_prime, "p' with p = 2p'+1 (fixture keys)");
  rsa_setup->add_option("--q-prime", o.q_prime, "q' with q = 2q'+1 (fixture keys)");
  rsa_setup->add_option("--e", o.e, "public exponent (default 65537)");
  add_structure(rsa_setup);
  add_seed(rsa_setup);
  add_out(rsa_setup, "output directory");
  handlers[rsa_setup] = cmd_rsa_setup;

  auto add_rsa_common = [&](CLI::App* sub) {
    sub->add_option("--public", o.public_path, "public key document")->required();
    sub->add_option("--coalition", o.coalition, "signing coalition")->delimiter(',')->required();
    sub->add_option("--msg", o.msg, "message in Z*_N")->required();
    sub->add_option("--level", o.level, "signing level (default: smallest satisfied)");
    add_out(sub, "output file (default stdout)");
  };
  auto* sign = app.add_subcommand("rsa-sign-partial", "compute a participant's partial signature");
  add_rsa_common(sign);
  sign->add_option("--share", o.share, "private share document")->required();
  handlers[sign] = cmd_rsa_sign_partial;

  auto* public_part = app.add_subcommand("rsa-public-part", "compute the server's public part");
  add_rsa_common(public_part);
  public_part->add_option("--participant", o.participant, "participant index")->required();
  handlers[public_part] = cmd_rsa_public_part;

  auto* combine_cmd = app.add_subcommand("rsa-combine", "combine partial signatures");
  add_rsa_common(combine_cmd);
  combine_cmd->add_option("--partials", o.partials, "partial signature documents")->required();
  combine_cmd->add_option("--public-parts", o.public_parts, "public part documents");
  handlers[combine_cmd] = cmd_rsa_combine;

  auto* verify_cmd = app.add_subcommand("rsa-verify", "verify a signature");
  verify_cmd->add_option("--public", o.public_path, "public key document")->required();
  verify_cmd->add_option("--msg", o.msg, "message")->required();
  verify_cmd->add_option("--signature", o.signature, "signature document or decimal value")
      ->required();
  add_out(verify_cmd, "output file (default stdout)");
  handlers[verify_cmd] = cmd_rsa_verify;

  auto* demo = app.add_subcommand("demo-example2", "reproduce the Harn-Fuyou attack example");
  demo->add_option("--format", o.format, "text (default) or json");
  add_out(demo, "output file for --format json");
  handlers[demo] = cmd_demo_example2;

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("mtss");
  for (std::string& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    out << error_json("UsageError", e.what()).dump() << '\n';
    return kExitMalformed;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o, out);
    }
    return kExitMalformed;
  } catch (const Error& e) {
    err << e.what() << '\n';
    out << error_json(to_string(e.code()), e.what()).dump() << '\n';
    return is_malformed(e.code()) ? kExitMalformed : kExitDomainError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    out << error_json("MalformedInput", e.what()).dump() << '\n';
    return kExitMalformed;
  }
}

}  // namespace mtss::cli

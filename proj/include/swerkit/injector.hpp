// Copyright 2026 The swerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWERKIT_INJECTOR_HPP
#define SWERKIT_INJECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swerkit/swer.hpp"
#include "swerkit/text.hpp"

namespace swerkit {

// SplitMix64. Used instead of <random> distributions so that variant files
// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n must be > 0.
  std::size_t below(std::size_t n);
  // Uniform in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

// Stream for one utterance: seed xor index, scrambled.
Rng utterance_rng(std::uint64_t seed, std::size_t utterance_index);

enum class InjectionMode { PerEntityPair, RandomMix };

std::string_view to_string(InjectionMode mode);
InjectionMode parse_injection_mode(std::string_view name);

struct SubstitutionStrategy {
  enum class Kind { CharPerturb, Homophone };
  Kind kind = Kind::CharPerturb;
  std::size_t edits = 2;  // k for CharPerturb, also the fallback for unknown homophones
  std::map<std::string, std::string> homophones;
};

// Reads `word replacement` pairs, one per line; '#' starts a comment.
std::map<std::string, std::string> read_homophones(std::istream &in);

struct MixRates {
  double p_sub = 0.1;
  double p_del = 0.05;
  double p_ins = 0.05;
};

struct CorruptionSpec {
  std::uint64_t seed = 0;
  InjectionMode mode = InjectionMode::PerEntityPair;
  SubstitutionStrategy substitution;
  MixRates rates;

  // Throws InvalidConfig for rates outside [0,1], rates summing past 1, or
  // zero perturbation edits.
  void validate() const;
};

struct InjectedOp {
  EditKind op = EditKind::Substitute;  // Substitute, Delete or Insert
  std::size_t token_index = 0;         // reference token the op acts on
};

struct Variant {
  std::string source_id;
  std::string variant_id;  // <id>-sub<token>, <id>-del<token> or <id>-mix
  std::vector<Token> tokens;
  std::vector<InjectedOp> ops;
};

// k random character edits (substitute, delete or insert, chosen uniformly)
// over a-z. Retries until the result is non-empty and differs from `word`.
std::string char_perturb(std::string_view word, std::size_t k, Rng &rng);

// PerEntityPair: for every NE token one variant with that token substituted
// and one with it removed, in token order. RandomMix: one variant with
// independent per-token corruptions. Throws NoEntities in PerEntityPair mode
// when the reference has no NE token.
std::vector<Variant> generate_entity_variants(const AnnotatedUtterance &ref,
                                              const CorruptionSpec &spec,
                                              std::size_t utterance_index);

struct InjectionResult {
  std::vector<Variant> variants;  // grouped by utterance, input order
  std::vector<std::string> warnings;
};

// Runs generate_entity_variants over a corpus on `jobs` threads. Output does
// not depend on `jobs`. NoEntities becomes a warning.
InjectionResult inject_corpus(std::span<const AnnotatedUtterance> corpus,
                              const CorruptionSpec &spec, std::size_t jobs = 1);

// Provenance JSON lines: {"id", "variant_id", "op", "token_index"}.
void write_provenance(std::ostream &out, std::span<const Variant> variants);

enum class Bucket { CatI, CatII, CatIII, Other };

std::string_view to_string(Bucket bucket);
Bucket parse_bucket(std::string_view name);
Bucket bucket_for(std::size_t entity_count);

struct Buckets {
  std::vector<std::string> cat1;
  std::vector<std::string> cat2;
  std::vector<std::string> cat3;
  std::vector<std::string> other;  // zero or more than three entities

  const std::vector<std::string> &of(Bucket b) const;
};

Buckets bucket_by_entity_count(std::span<const AnnotatedUtterance> corpus);

}  // namespace swerkit

#endif  // SWERKIT_INJECTOR_HPP

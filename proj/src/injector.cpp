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

#include "swerkit/injector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <optional>
#include <thread>

#include "json.hpp"
#include "swerkit/error.hpp"

namespace swerkit {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t Rng::below(std::size_t n) {
  return static_cast<std::size_t>(next() % static_cast<std::uint64_t>(n));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng utterance_rng(std::uint64_t seed, std::size_t utterance_index) {
  Rng mixer(seed ^ static_cast<std::uint64_t>(utterance_index));
  return Rng(mixer.next());
}

std::string_view to_string(InjectionMode mode) {
  return mode == InjectionMode::PerEntityPair ? "per-entity" : "random-mix";
}

InjectionMode parse_injection_mode(std::string_view name) {
  if (name == "per-entity") return InjectionMode::PerEntityPair;
  if (name == "random-mix") return InjectionMode::RandomMix;
  throw Error(ErrorCode::InvalidConfig,
              "mode must be 'per-entity' or 'random-mix', got '" + std::string(name) + "'");
}

std::map<std::string, std::string> read_homophones(std::istream &in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::MalformedLine,
                  "homophone line " + std::to_string(line_no) + ": expected 'word replacement'");
    }
    out.emplace(normalize_word(fields[0]), normalize_word(fields[1]));
  }
  return out;
}

void CorruptionSpec::validate() const {
  for (double p : {rates.p_sub, rates.p_del, rates.p_ins}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::InvalidConfig, "corruption rates must lie in [0, 1]");
    }
  }
  if (rates.p_sub + rates.p_del + rates.p_ins > 1.0 + 1e-12) {
    throw Error(ErrorCode::InvalidConfig, "p_sub + p_del + p_ins must not exceed 1");
  }
  if (substitution.edits == 0) {
    throw Error(ErrorCode::InvalidConfig, "character perturbation needs at least one edit");
  }
}

namespace {

constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";

std::string random_letter(Rng &rng) { return std::string(1, kLetters[rng.below(kLetters.size())]); }

std::string random_letter_except(Rng &rng, const std::string &avoid) {
  for (;;) {
    auto c = random_letter(rng);
    if (c != avoid) return c;
  }
}

std::string substitute_word(const std::string &word, const SubstitutionStrategy &s, Rng &rng) {
  if (s.kind == SubstitutionStrategy::Kind::Homophone) {
    auto it = s.homophones.find(word);
    if (it != s.homophones.end() && it->second != word && !it->second.empty()) return it->second;
  }
  return char_perturb(word, s.edits, rng);
}

}  // namespace

std::string char_perturb(std::string_view word, std::size_t k, Rng &rng) {
  const auto original = split_chars(word);
  for (;;) {
    auto chars = original;
    for (std::size_t e = 0; e < k; ++e) {
      std::size_t kind = rng.below(3);
      if (kind == 1 && chars.size() <= 1) kind = rng.below(2) == 0 ? 0 : 2;
      if (chars.empty()) kind = 2;
      if (kind == 0) {
        auto pos = rng.below(chars.size());
        chars[pos] = random_letter_except(rng, chars[pos]);
      } else if (kind == 1) {
        chars.erase(chars.begin() + static_cast<std::ptrdiff_t>(rng.below(chars.size())));
      } else {
        auto pos = rng.below(chars.size() + 1);
        chars.insert(chars.begin() + static_cast<std::ptrdiff_t>(pos), random_letter(rng));
      }
    }
    std::string out;
    for (const auto &c : chars) out += c;
    if (!out.empty() && out != word) return out;
  }
}

std::vector<Variant> generate_entity_variants(const AnnotatedUtterance &ref,
                                              const CorruptionSpec &spec,
                                              std::size_t utterance_index) {
  spec.validate();
  Rng rng = utterance_rng(spec.seed, utterance_index);
  std::vector<Variant> out;
  if (spec.mode == InjectionMode::PerEntityPair) {
    for (std::size_t i = 0; i < ref.tokens.size(); ++i) {
      if (ref.tags[i] != TagClass::NE) continue;
      Variant sub;
      sub.source_id = ref.id;
      sub.variant_id = ref.id + "-sub" + std::to_string(i);
      sub.tokens = ref.tokens;
      sub.tokens[i].text = substitute_word(ref.tokens[i].text, spec.substitution, rng);
      sub.ops.push_back({EditKind::Substitute, i});
      out.push_back(std::move(sub));

      Variant del;
      del.source_id = ref.id;
      del.variant_id = ref.id + "-del" + std::to_string(i);
      for (std::size_t j = 0; j < ref.tokens.size(); ++j) {
        if (j != i) del.tokens.push_back(Token{ref.tokens[j].text, del.tokens.size()});
      }
      del.ops.push_back({EditKind::Delete, i});
      out.push_back(std::move(del));
    }
    if (out.empty()) throw Error(ErrorCode::NoEntities, ref.id + ": no named entities to corrupt");
    return out;
  }

  Variant mix;
  mix.source_id = ref.id;
  mix.variant_id = ref.id + "-mix";
  const auto &r = spec.rates;
  for (std::size_t i = 0; i < ref.tokens.size(); ++i) {
    const double u = rng.unit();
    if (u < r.p_sub) {
      mix.tokens.push_back(Token{substitute_word(ref.tokens[i].text, spec.substitution, rng),
                                 mix.tokens.size()});
      mix.ops.push_back({EditKind::Substitute, i});
    } else if (u < r.p_sub + r.p_del) {
      mix.ops.push_back({EditKind::Delete, i});
    } else if (u < r.p_sub + r.p_del + r.p_ins) {
      mix.tokens.push_back(Token{ref.tokens[i].text, mix.tokens.size()});
      std::string word;
      const std::size_t len = 2 + rng.below(5);
      for (std::size_t c = 0; c < len; ++c) word += random_letter(rng);
      mix.tokens.push_back(Token{std::move(word), mix.tokens.size()});
      mix.ops.push_back({EditKind::Insert, i});
    } else {
      mix.tokens.push_back(Token{ref.tokens[i].text, mix.tokens.size()});
    }
  }
  out.push_back(std::move(mix));
  return out;
}

InjectionResult inject_corpus(std::span<const AnnotatedUtterance> corpus,
                              const CorruptionSpec &spec, std::size_t jobs) {
  spec.validate();
  struct Slot {
    std::vector<Variant> variants;
    std::optional<std::string> warning;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        slots[i].variants = generate_entity_variants(corpus[i], spec, i);
      } catch (const Error &e) {
        if (e.code() == ErrorCode::NoEntities) {
          slots[i].warning = e.what();
        } else {
          slots[i].error = std::current_exception();
        }
      } catch (...) {
        slots[i].error = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  InjectionResult out;
  for (auto &slot : slots) {
    if (slot.error) std::rethrow_exception(slot.error);
    if (slot.warning) out.warnings.push_back(*slot.warning);
    for (auto &v : slot.variants) out.variants.push_back(std::move(v));
  }
  return out;
}

void write_provenance(std::ostream &out, std::span<const Variant> variants) {
  for (const auto &v : variants) {
    for (const auto &op : v.ops) {
      nlohmann::ordered_json j;
      j["id"] = v.source_id;
      j["variant_id"] = v.variant_id;
      j["op"] = std::string(to_string(op.op));
      j["token_index"] = op.token_index;
      out << j.dump() << '\n';
    }
  }
}

std::string_view to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::CatI:
      return "Cat-I";
    case Bucket::CatII:
      return "Cat-II";
    case Bucket::CatIII:
      return "Cat-III";
    case Bucket::Other:
      return "Other";
  }
  return "?";
}

Bucket parse_bucket(std::string_view name) {
  for (auto b : {Bucket::CatI, Bucket::CatII, Bucket::CatIII, Bucket::Other}) {
    if (to_string(b) == name) return b;
  }
  throw Error(ErrorCode::MalformedLine, "unknown bucket '" + std::string(name) + "'");
}

Bucket bucket_for(std::size_t entity_count) {
  switch (entity_count) {
    case 1:
      return Bucket::CatI;
    case 2:
      return Bucket::CatII;
    case 3:
      return Bucket::CatIII;
    default:
      return Bucket::Other;
  }
}

const std::vector<std::string> &Buckets::of(Bucket b) const {
  switch (b) {
    case Bucket::CatI:
      return cat1;
    case Bucket::CatII:
      return cat2;
    case Bucket::CatIII:
      return cat3;
    case Bucket::Other:
      break;
  }
  return other;
}

Buckets bucket_by_entity_count(std::span<const AnnotatedUtterance> corpus) {
  Buckets out;
  for (const auto &u : corpus) {
    switch (bucket_for(u.entity_count())) {
      case Bucket::CatI:
        out.cat1.push_back(u.id);
        break;
      case Bucket::CatII:
        out.cat2.push_back(u.id);
        break;
      case Bucket::CatIII:
        out.cat3.push_back(u.id);
        break;
      case Bucket::Other:
        out.other.push_back(u.id);
        break;
    }
  }
  return out;
}

}  // namespace swerkit

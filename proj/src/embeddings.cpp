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

#include "swerkit/embeddings.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "swerkit/align.hpp"
#include "swerkit/error.hpp"
#include "swerkit/text.hpp"

namespace swerkit {

std::string_view to_string(OovPolicy policy) {
  return policy == OovPolicy::Dissimilar ? "dissimilar" : "char-fallback";
}

OovPolicy parse_oov_policy(std::string_view name) {
  if (name == "dissimilar") return OovPolicy::Dissimilar;
  if (name == "char-fallback") return OovPolicy::CharFallback;
  throw Error(ErrorCode::InvalidConfig,
              "oov policy must be 'dissimilar' or 'char-fallback', got '" +
                  std::string(name) + "'");
}

EmbeddingLexicon::EmbeddingLexicon(const EmbeddingLexicon &other)
    : dim_(other.dim_), table_(other.table_), summary_(other.summary_) {
  lookups_ = other.lookups();
  misses_ = other.misses();
}

EmbeddingLexicon &EmbeddingLexicon::operator=(const EmbeddingLexicon &other) {
  if (this != &other) {
    dim_ = other.dim_;
    table_ = other.table_;
    summary_ = other.summary_;
    lookups_ = other.lookups();
    misses_ = other.misses();
  }
  return *this;
}

EmbeddingLexicon::EmbeddingLexicon(EmbeddingLexicon &&other) noexcept
    : dim_(other.dim_), table_(std::move(other.table_)), summary_(other.summary_) {
  lookups_ = other.lookups();
  misses_ = other.misses();
}

EmbeddingLexicon &EmbeddingLexicon::operator=(EmbeddingLexicon &&other) noexcept {
  if (this != &other) {
    dim_ = other.dim_;
    table_ = std::move(other.table_);
    summary_ = other.summary_;
    lookups_ = other.lookups();
    misses_ = other.misses();
  }
  return *this;
}

bool EmbeddingLexicon::insert(std::string word, std::vector<float> vec) {
  if (dim_ == 0) dim_ = vec.size();
  if (vec.size() != dim_) {
    throw Error(ErrorCode::InconsistentDimension,
                "vector for '" + word + "' has " + std::to_string(vec.size()) +
                    " components, expected " + std::to_string(dim_));
  }
  return table_.emplace(std::move(word), std::move(vec)).second;
}

const std::vector<float> *EmbeddingLexicon::find(std::string_view word) const {
  lookups_.fetch_add(1, std::memory_order_relaxed);
  auto it = table_.find(std::string(word));
  if (it == table_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return nullptr;
  }
  return &it->second;
}

void EmbeddingLexicon::reset_stats() const {
  lookups_ = 0;
  misses_ = 0;
}

std::vector<std::string> EmbeddingLexicon::words() const {
  std::vector<std::string> out;
  out.reserve(table_.size());
  for (const auto &kv : table_) out.push_back(kv.first);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool parse_size(std::string_view s, std::size_t &out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_float(const std::string &s, float &out) {
  // strtof accepts the exponent/inf/nan spellings found in the wild.
  char *end = nullptr;
  errno = 0;
  out = std::strtof(s.c_str(), &end);
  return end == s.c_str() + s.size() && !s.empty() && std::isfinite(out);
}

}  // namespace

EmbeddingLexicon load_text_vectors(std::istream &in) {
  EmbeddingLexicon lex;
  LoadSummary summary;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (first) {
      first = false;
      std::size_t count = 0;
      std::size_t dim = 0;
      if (fields.size() == 2 && parse_size(fields[0], count) &&
          parse_size(fields[1], dim) && dim > 0) {
        lex = EmbeddingLexicon(dim);
        summary.had_header = true;
        continue;
      }
    }
    if (fields.size() < 2) {
      ++summary.malformed;
      continue;
    }
    std::vector<float> vec;
    vec.reserve(fields.size() - 1);
    bool ok = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      float v = 0.0f;
      if (!parse_float(fields[i], v)) {
        ok = false;
        break;
      }
      vec.push_back(v);
    }
    if (!ok) {
      ++summary.malformed;
      continue;
    }
    if (lex.dim() != 0 && vec.size() != lex.dim()) {
      throw Error(ErrorCode::InconsistentDimension,
                  "line " + std::to_string(line_no) + ": " +
                      std::to_string(vec.size()) + " components, expected " +
                      std::to_string(lex.dim()));
    }
    if (lex.insert(fields[0], std::move(vec))) {
      ++summary.rows;
    } else {
      ++summary.duplicates;
    }
  }
  if (lex.empty()) throw Error(ErrorCode::EmptyLexicon, "no vectors found");
  lex.set_load_summary(summary);
  return lex;
}

EmbeddingLexicon load_text_vectors_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open embeddings file '" + path + "'");
  return load_text_vectors(in);
}

double cosine(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cosine of vectors with " + std::to_string(u.size()) + " and " +
                    std::to_string(v.size()) + " components");
  }
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
    nu += static_cast<double>(u[i]) * u[i];
    nv += static_cast<double>(v[i]) * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

double similarity(std::string_view ref_word, std::string_view hyp_word,
                  const EmbeddingLexicon &lex, OovPolicy policy) {
  if (ref_word == hyp_word) return 1.0;
  const auto *u = lex.find(ref_word);
  const auto *v = lex.find(hyp_word);
  if (u != nullptr && v != nullptr) return std::max(0.0, cosine(*u, *v));
  if (policy == OovPolicy::Dissimilar) return 0.0;
  // max(1 - cer(a, b), 1 - cer(b, a)): the symmetric form of a CER fallback.
  const double longest = static_cast<double>(
      std::max(split_chars(ref_word).size(), split_chars(hyp_word).size()));
  if (longest == 0.0) return 1.0;
  const double d = static_cast<double>(char_edit_distance(ref_word, hyp_word));
  return std::clamp(1.0 - d / longest, 0.0, 1.0);
}

void TableSimilarity::set(std::string a, std::string b, double value) {
  if (b < a) std::swap(a, b);
  table_[{std::move(a), std::move(b)}] = value;
}

double TableSimilarity::similarity(std::string_view ref_word,
                                   std::string_view hyp_word) const {
  if (ref_word == hyp_word) return 1.0;
  std::string a(ref_word);
  std::string b(hyp_word);
  if (b < a) std::swap(a, b);
  auto it = table_.find(std::make_pair(a, b));
  return it == table_.end() ? fallback_ : it->second;
}

}  // namespace swerkit

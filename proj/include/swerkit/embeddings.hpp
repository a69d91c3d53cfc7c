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

#ifndef SWERKIT_EMBEDDINGS_HPP
#define SWERKIT_EMBEDDINGS_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swerkit {

enum class OovPolicy {
  Dissimilar,    // unknown word pairs score 0
  CharFallback,  // unknown word pairs score 1 - edits / max(len)
};

std::string_view to_string(OovPolicy policy);
OovPolicy parse_oov_policy(std::string_view name);

struct LoadSummary {
  std::size_t rows = 0;        // vectors kept
  std::size_t malformed = 0;   // lines skipped for non-numeric fields
  std::size_t duplicates = 0;  // repeated words, first occurrence kept
  bool had_header = false;
};

/// Word to dense vector table. Immutable after loading; lookups may run
/// concurrently and the lookup/miss counters are atomic.
class EmbeddingLexicon {
 public:
  EmbeddingLexicon() = default;
  explicit EmbeddingLexicon(std::size_t dim) : dim_(dim) {}

  EmbeddingLexicon(const EmbeddingLexicon &other);
  EmbeddingLexicon &operator=(const EmbeddingLexicon &other);
  EmbeddingLexicon(EmbeddingLexicon &&other) noexcept;
  EmbeddingLexicon &operator=(EmbeddingLexicon &&other) noexcept;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return table_.size(); }
  bool empty() const { return table_.empty(); }

  // Returns false (and keeps the old vector) when the word already exists.
  // Throws InconsistentDimension on a length mismatch.
  bool insert(std::string word, std::vector<float> vec);

  // nullptr when absent. Counts one lookup, plus a miss when absent.
  const std::vector<float> *find(std::string_view word) const;

  std::uint64_t lookups() const { return lookups_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }
  void reset_stats() const;

  // Sorted word list, useful for deterministic dumps.
  std::vector<std::string> words() const;

  const LoadSummary &load_summary() const { return summary_; }
  void set_load_summary(const LoadSummary &s) { summary_ = s; }

 private:
  std::size_t dim_ = 0;
  std::unordered_map<std::string, std::vector<float>> table_;
  LoadSummary summary_;
  mutable std::atomic<std::uint64_t> lookups_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

// Parses word2vec/GloVe style text: one `word v1 ... vd` per line, with an
// optional leading `count dim` header. Lines with non-numeric fields are
// skipped and counted; a row whose width disagrees with the established
// dimension throws InconsistentDimension; no rows at all throws EmptyLexicon.
EmbeddingLexicon load_text_vectors(std::istream &in);
EmbeddingLexicon load_text_vectors_file(const std::string &path);

// u.v / (|u||v|); 0 if either vector is all zeros.
double cosine(std::span<const float> u, std::span<const float> v);

// Word similarity in [0, 1]. Identical strings are 1 regardless of the
// lexicon; in-lexicon pairs use max(cosine, 0); otherwise the OOV policy
// decides.
double similarity(std::string_view ref_word, std::string_view hyp_word,
                  const EmbeddingLexicon &lex, OovPolicy policy);

/// Similarity source consumed by the SWER engine. Implementations must be
/// safe to share read-only across threads.
class SimilarityOracle {
 public:
  virtual ~SimilarityOracle() = default;
  virtual double similarity(std::string_view ref_word,
                            std::string_view hyp_word) const = 0;
};

class LexiconSimilarity final : public SimilarityOracle {
 public:
  LexiconSimilarity(const EmbeddingLexicon &lex, OovPolicy policy)
      : lex_(lex), policy_(policy) {}

  double similarity(std::string_view ref_word,
                    std::string_view hyp_word) const override {
    return swerkit::similarity(ref_word, hyp_word, lex_, policy_);
  }

 private:
  const EmbeddingLexicon &lex_;
  OovPolicy policy_;
};

// Explicit pair table, symmetric; unlisted non-identical pairs get
// `fallback`. Handy for tests and for user-curated similarity lists.
class TableSimilarity final : public SimilarityOracle {
 public:
  explicit TableSimilarity(double fallback = 0.0) : fallback_(fallback) {}

  void set(std::string a, std::string b, double value);

  double similarity(std::string_view ref_word,
                    std::string_view hyp_word) const override;

 private:
  double fallback_;
  std::map<std::pair<std::string, std::string>, double, std::less<>> table_;
};

}  // namespace swerkit

#endif  // SWERKIT_EMBEDDINGS_HPP

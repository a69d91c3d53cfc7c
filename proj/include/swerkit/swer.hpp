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

#ifndef SWERKIT_SWER_HPP
#define SWERKIT_SWER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swerkit/align.hpp"
#include "swerkit/embeddings.hpp"
#include "swerkit/text.hpp"

namespace swerkit {

enum class TagClass {
  Plain,
  NE,    // named entity
  SENT,  // sentiment word
  SE,    // spelled-out entity
};

std::string_view to_string(TagClass tag);

// Half-open token range [start, end) of the reference that spells out one
// entity letter by letter. An empty canonical string means "concatenate the
// letters".
struct SpelledSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string canonical;

  friend bool operator==(const SpelledSpan &, const SpelledSpan &) = default;
};

struct AnnotatedUtterance {
  std::string id;
  std::string raw_text;
  std::vector<Token> tokens;
  std::vector<TagClass> tags;  // one per token
  std::vector<SpelledSpan> spelled_spans;

  // Number of NE-tagged tokens.
  std::size_t entity_count() const;

  // Throws ConflictingAnnotation on out-of-range or overlapping spans, a
  // tag vector of the wrong length, or span tokens not tagged SE.
  void validate() const;
};

// Builds an utterance from raw text plus index lists over the normalized
// tokens. Throws ConflictingAnnotation when an index is out of range or a
// token would receive two classes.
AnnotatedUtterance make_annotated(std::string id, std::string_view text,
                                  std::span<const std::size_t> ne = {},
                                  std::span<const std::size_t> sent = {},
                                  std::span<const SpelledSpan> spelled = {});

struct SwerConfig {
  double iw = 1.0;
  double sim_threshold = 0.6;
  std::size_t char_sub_threshold = 0;
  bool clamp_output = true;
  OovPolicy oov_policy = OovPolicy::Dissimilar;

  // Throws InvalidConfig unless iw >= 1 and 0 < sim_threshold < 1.
  void validate() const;
};

enum class Reason {
  Entity,
  Sentiment,
  SpelledCer,
  SimBelow,
  SimAbove,
  PlainDel,
  Ins,
};

std::string_view to_string(Reason reason);
Reason parse_reason(std::string_view name);

struct WeightDecision {
  double weight = 0.0;
  Reason reason = Reason::SimBelow;
};

struct TraceEntry {
  EditOp op;
  std::string ref_word;
  std::string hyp_word;
  double weight = 0.0;        // per-op weight before length normalization
  double contribution = 0.0;  // what the op adds to score_a
  Reason reason = Reason::SimBelow;
};

struct SwerBreakdown {
  double score_a = 0.0;
  double accuracy = 1.0;
  double dw = 0.0;
  std::size_t wrong_important = 0;
  double swer = 0.0;
  double swer_unclamped = 0.0;
  std::size_t ref_len = 0;  // after spelled-span collapsing
  std::size_t hyp_len = 0;
  std::vector<TraceEntry> trace;
};

// NE/SENT -> 1; SE -> cer; PLAIN -> 1 below the similarity threshold and 0 at
// or above it.
WeightDecision substitution_weight(const Token &ref, TagClass tag,
                                   const Token &hyp, const SwerConfig &cfg,
                                   const SimilarityOracle &sim);

// Every class weighs 1 here; the 1/N_r scaling happens in score_a, which is
// where a plain deletion ends up contributing 1/N_r.
WeightDecision deletion_weight(const Token &ref, TagClass tag,
                               const SwerConfig &cfg);

// 1/N_h per inserted hypothesis word.
double insertion_weight(const SwerConfig &cfg, std::size_t hyp_len);

struct ScoreA {
  double score_a = 0.0;
  std::size_t wrong_important = 0;
  std::vector<TraceEntry> trace;
};

// score_a = (sum of substitution and deletion weights) / N_r + #ins / N_h.
// NE and SENT substitutions/deletions also count as wrong important words.
ScoreA score_a(const AlignmentResult &a, std::span<const Token> ref,
               std::span<const TagClass> tags, std::span<const Token> hyp,
               const SwerConfig &cfg, const SimilarityOracle &sim);

// Final score from an alignment of (already collapsed) sequences:
//   accuracy = 1 - min(score_a, 1)
//   dw       = accuracy / (N_r - #wrong_important), 0 if that is 0
//   swer     = score_a + #wrong_important * iw * dw, clamped to [0, 1]
SwerBreakdown swer_score(const AlignmentResult &a, std::span<const Token> ref,
                         std::span<const TagClass> tags,
                         std::span<const Token> hyp, const SwerConfig &cfg,
                         const SimilarityOracle &sim);

// Reference and hypothesis with every spelled span reduced to one unit.
struct CollapsedPair {
  std::vector<Token> ref;
  std::vector<TagClass> ref_tags;
  std::vector<Token> hyp;
  // Original [begin, end) token range behind each collapsed position.
  std::vector<std::pair<std::size_t, std::size_t>> ref_span_map;
  std::vector<std::pair<std::size_t, std::size_t>> hyp_span_map;
};

// Each reference span becomes one SE token; the hypothesis tokens that the
// word-level `raw` alignment places against the span are concatenated into
// one hypothesis unit (or vanish if nothing lines up).
CollapsedPair collapse_spelled_spans(const AnnotatedUtterance &ref,
                                     std::span<const Token> hyp,
                                     const AlignmentResult &raw);
CollapsedPair collapse_spelled_spans(const AnnotatedUtterance &ref,
                                     std::span<const Token> hyp);

// collapse_spelled_spans + align_words + swer_score.
SwerBreakdown score_utterance(const AnnotatedUtterance &ref,
                              std::span<const Token> hyp, const SwerConfig &cfg,
                              const SimilarityOracle &sim);

// Recomputes the final score for another importance weight from a
// breakdown; dw does not depend on iw.
double swer_at_iw(const SwerBreakdown &b, double iw, bool clamp_output = true);

}  // namespace swerkit

#endif  // SWERKIT_SWER_HPP

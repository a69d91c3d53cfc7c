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

#ifndef SWERKIT_CORPUS_HPP
#define SWERKIT_CORPUS_HPP

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swerkit/swer.hpp"
#include "swerkit/text.hpp"

namespace swerkit {

// ---------------------------------------------------------------------------
// CoNLL-2003 column files

struct ConllToken {
  std::string surface;
  std::string ne_tag;  // "O", "I-PER", "B-LOC", ...
};

struct ConllSentence {
  std::vector<ConllToken> tokens;
  std::size_t document = 0;  // 0 before the first -DOCSTART-
};

struct ParseIssue {
  std::size_t line_no = 0;
  std::string message;
};

struct ConllParseResult {
  std::vector<ConllSentence> sentences;
  std::vector<ParseIssue> issues;  // malformed lines, skipped
  std::size_t documents = 0;       // -DOCSTART- markers seen
};

// Token in the first column, NE tag in the last; blank lines end sentences
// and -DOCSTART- lines are document boundaries, never sentences. Never throws
// on content: bad lines are reported in `issues` and skipped.
ConllParseResult parse_conll(std::istream &in);

// Tokens are normalized (punctuation-only ones vanish) and every token whose
// tag is not "O" becomes NE. Throws EmptyReference when nothing survives.
AnnotatedUtterance to_annotated(const ConllSentence &s, std::string id);

// ---------------------------------------------------------------------------
// Transcripts and annotation sidecars

struct TranscriptRecord {
  std::string id;
  std::string text;

  friend bool operator==(const TranscriptRecord &, const TranscriptRecord &) = default;
};

enum class TranscriptFormat { Trn, JsonLines };

// Reads `text (id)` lines or `{"id": ..., "text": ...}` JSON lines; the
// format is sniffed from the first non-blank character. Throws DuplicateId
// or MalformedLine.
std::vector<TranscriptRecord> read_transcripts(std::istream &in);

void write_transcripts(std::ostream &out, const std::vector<TranscriptRecord> &records,
                       TranscriptFormat format);

struct AnnotationRecord {
  std::string id;
  std::vector<std::size_t> ne;
  std::vector<std::size_t> sent;
  std::vector<SpelledSpan> spelled;

  friend bool operator==(const AnnotationRecord &, const AnnotationRecord &) = default;
};

// JSON lines `{"id", "ne": [idx], "sent": [idx], "spelled": [[start, end,
// canonical]]}`. Indices refer to normalized reference tokens; spans are
// half-open.
std::map<std::string, AnnotationRecord> read_annotations(std::istream &in);

void write_annotations(std::ostream &out, const std::vector<AnnotationRecord> &records);

AnnotationRecord annotation_of(const AnnotatedUtterance &u);

// References joined with their (optional) annotations, sorted by id. Throws
// MissingReference for annotations without a reference, EmptyReference for
// references with no tokens, ConflictingAnnotation for bad indices.
std::vector<AnnotatedUtterance> read_references(std::istream &ref_in,
                                                std::istream *annotations_in);

struct ScoringPair {
  std::string id;
  AnnotatedUtterance reference;
  std::vector<Token> hypothesis;
};

struct PairsResult {
  std::vector<ScoringPair> pairs;  // sorted by id
  std::vector<std::string> warnings;
};

// Joins references, hypotheses and optional annotations on id. A hypothesis
// without a reference throws MissingReference; a reference without a
// hypothesis is scored against an empty hypothesis and produces a warning.
PairsResult parse_pairs(std::istream &ref_in, std::istream &hyp_in,
                        std::istream *annotations_in);

}  // namespace swerkit

#endif  // SWERKIT_CORPUS_HPP

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

#include "swerkit/swer.hpp"

#include <algorithm>

#include "swerkit/error.hpp"
#include "swerkit/metrics.hpp"

namespace swerkit {

std::string_view to_string(TagClass tag) {
  switch (tag) {
    case TagClass::Plain:
      return "plain";
    case TagClass::NE:
      return "ne";
    case TagClass::SENT:
      return "sent";
    case TagClass::SE:
      return "se";
  }
  return "?";
}

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::Entity:
      return "entity";
    case Reason::Sentiment:
      return "sentiment";
    case Reason::SpelledCer:
      return "spelled-cer";
    case Reason::SimBelow:
      return "sim-below";
    case Reason::SimAbove:
      return "sim-above";
    case Reason::PlainDel:
      return "plain-del";
    case Reason::Ins:
      return "ins";
  }
  return "?";
}

Reason parse_reason(std::string_view name) {
  for (auto r : {Reason::Entity, Reason::Sentiment, Reason::SpelledCer,
                 Reason::SimBelow, Reason::SimAbove, Reason::PlainDel,
                 Reason::Ins}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::MalformedLine, "unknown reason code '" + std::string(name) + "'");
}

std::size_t AnnotatedUtterance::entity_count() const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), TagClass::NE));
}

void AnnotatedUtterance::validate() const {
  if (tags.size() != tokens.size()) {
    throw Error(ErrorCode::ConflictingAnnotation,
                id + ": " + std::to_string(tags.size()) + " tags for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  auto spans = spelled_spans;
  std::sort(spans.begin(), spans.end(),
            [](const SpelledSpan &a, const SpelledSpan &b) { return a.start < b.start; });
  std::size_t covered_until = 0;
  for (const auto &s : spans) {
    if (s.start >= s.end || s.end > tokens.size()) {
      throw Error(ErrorCode::ConflictingAnnotation,
                  id + ": spelled span [" + std::to_string(s.start) + "," +
                      std::to_string(s.end) + ") out of range for " +
                      std::to_string(tokens.size()) + " tokens");
    }
    if (s.start < covered_until) {
      throw Error(ErrorCode::ConflictingAnnotation, id + ": overlapping spelled spans");
    }
    covered_until = s.end;
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (tags[i] != TagClass::SE) {
        throw Error(ErrorCode::ConflictingAnnotation,
                    id + ": token " + std::to_string(i) + " inside a spelled span is tagged " +
                        std::string(to_string(tags[i])));
      }
    }
  }
}

AnnotatedUtterance make_annotated(std::string id, std::string_view text,
                                  std::span<const std::size_t> ne,
                                  std::span<const std::size_t> sent,
                                  std::span<const SpelledSpan> spelled) {
  AnnotatedUtterance u;
  u.id = std::move(id);
  u.raw_text = std::string(text);
  u.tokens = tokenize(text);
  u.tags.assign(u.tokens.size(), TagClass::Plain);
  auto assign = [&u](std::size_t i, TagClass tag) {
    if (i >= u.tokens.size()) {
      throw Error(ErrorCode::ConflictingAnnotation,
                  u.id + ": " + std::string(to_string(tag)) + " index " + std::to_string(i) +
                      " out of range for " + std::to_string(u.tokens.size()) + " tokens");
    }
    if (u.tags[i] != TagClass::Plain && u.tags[i] != tag) {
      throw Error(ErrorCode::ConflictingAnnotation,
                  u.id + ": token " + std::to_string(i) + " tagged both " +
                      std::string(to_string(u.tags[i])) + " and " + std::string(to_string(tag)));
    }
    u.tags[i] = tag;
  };
  for (auto i : ne) assign(i, TagClass::NE);
  for (auto i : sent) assign(i, TagClass::SENT);
  for (const auto &s : spelled) {
    if (s.start >= s.end || s.end > u.tokens.size()) {
      throw Error(ErrorCode::ConflictingAnnotation,
                  u.id + ": spelled span [" + std::to_string(s.start) + "," +
                      std::to_string(s.end) + ") out of range for " +
                      std::to_string(u.tokens.size()) + " tokens");
    }
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (u.tags[i] == TagClass::SE) {
        throw Error(ErrorCode::ConflictingAnnotation, u.id + ": overlapping spelled spans");
      }
      assign(i, TagClass::SE);
    }
    u.spelled_spans.push_back(s);
  }
  std::sort(u.spelled_spans.begin(), u.spelled_spans.end(),
            [](const SpelledSpan &a, const SpelledSpan &b) { return a.start < b.start; });
  u.validate();
  return u;
}

void SwerConfig::validate() const {
  if (!(iw >= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "iw must be >= 1, got " + std::to_string(iw));
  }
  if (!(sim_threshold > 0.0 && sim_threshold < 1.0)) {
    throw Error(ErrorCode::InvalidConfig,
                "sim-threshold must lie in (0, 1), got " + std::to_string(sim_threshold));
  }
}

WeightDecision substitution_weight(const Token &ref, TagClass tag,
                                   const Token &hyp, const SwerConfig &cfg,
                                   const SimilarityOracle &sim) {
  switch (tag) {
    case TagClass::NE:
      return {1.0, Reason::Entity};
    case TagClass::SENT:
      return {1.0, Reason::Sentiment};
    case TagClass::SE:
      return {cer(ref.text, hyp.text, cfg.char_sub_threshold), Reason::SpelledCer};
    case TagClass::Plain:
      break;
  }
  // A similarity of exactly the threshold counts as similar.
  if (sim.similarity(ref.text, hyp.text) >= cfg.sim_threshold) {
    return {0.0, Reason::SimAbove};
  }
  return {1.0, Reason::SimBelow};
}

WeightDecision deletion_weight(const Token &ref, TagClass tag,
                               const SwerConfig &cfg) {
  switch (tag) {
    case TagClass::NE:
      return {1.0, Reason::Entity};
    case TagClass::SENT:
      return {1.0, Reason::Sentiment};
    case TagClass::SE:
      return {cer(ref.text, "", cfg.char_sub_threshold), Reason::SpelledCer};
    case TagClass::Plain:
      break;
  }
  return {1.0, Reason::PlainDel};
}

double insertion_weight(const SwerConfig &, std::size_t hyp_len) {
  return hyp_len == 0 ? 0.0 : 1.0 / static_cast<double>(hyp_len);
}

namespace {

bool is_important(TagClass tag) { return tag == TagClass::NE || tag == TagClass::SENT; }

}  // namespace

ScoreA score_a(const AlignmentResult &a, std::span<const Token> ref,
               std::span<const TagClass> tags, std::span<const Token> hyp,
               const SwerConfig &cfg, const SimilarityOracle &sim) {
  if (ref.empty()) {
    throw Error(ErrorCode::EmptyReference, "SWER needs a non-empty reference");
  }
  const double n_ref = static_cast<double>(ref.size());
  const double ins_weight = insertion_weight(cfg, hyp.size());
  ScoreA out;
  double ref_side = 0.0;
  double hyp_side = 0.0;
  for (const auto &op : a.ops) {
    TraceEntry entry;
    entry.op = op;
    switch (op.kind) {
      case EditKind::Match:
        continue;
      case EditKind::Substitute: {
        const auto tag = tags[*op.ref_index];
        const auto d = substitution_weight(ref[*op.ref_index], tag, hyp[*op.hyp_index], cfg, sim);
        entry.ref_word = ref[*op.ref_index].text;
        entry.hyp_word = hyp[*op.hyp_index].text;
        entry.weight = d.weight;
        entry.contribution = d.weight / n_ref;
        entry.reason = d.reason;
        ref_side += d.weight;
        if (is_important(tag)) ++out.wrong_important;
        break;
      }
      case EditKind::Delete: {
        const auto tag = tags[*op.ref_index];
        const auto d = deletion_weight(ref[*op.ref_index], tag, cfg);
        entry.ref_word = ref[*op.ref_index].text;
        entry.weight = d.weight;
        entry.contribution = d.weight / n_ref;
        entry.reason = d.reason;
        ref_side += d.weight;
        if (is_important(tag)) ++out.wrong_important;
        break;
      }
      case EditKind::Insert:
        entry.hyp_word = hyp[*op.hyp_index].text;
        entry.weight = ins_weight;
        entry.contribution = ins_weight;
        entry.reason = Reason::Ins;
        hyp_side += ins_weight;
        break;
    }
    out.trace.push_back(std::move(entry));
  }
  out.score_a = ref_side / n_ref + hyp_side;
  return out;
}

SwerBreakdown swer_score(const AlignmentResult &a, std::span<const Token> ref,
                         std::span<const TagClass> tags,
                         std::span<const Token> hyp, const SwerConfig &cfg,
                         const SimilarityOracle &sim) {
  cfg.validate();
  auto sa = score_a(a, ref, tags, hyp, cfg, sim);
  SwerBreakdown b;
  b.ref_len = ref.size();
  b.hyp_len = hyp.size();
  b.score_a = sa.score_a;
  b.wrong_important = sa.wrong_important;
  b.accuracy = 1.0 - std::min(sa.score_a, 1.0);
  b.dw = b.ref_len > b.wrong_important
             ? b.accuracy / static_cast<double>(b.ref_len - b.wrong_important)
             : 0.0;
  b.trace = std::move(sa.trace);
  b.swer_unclamped = swer_at_iw(b, cfg.iw, false);
  b.swer = swer_at_iw(b, cfg.iw, cfg.clamp_output);
  return b;
}

double swer_at_iw(const SwerBreakdown &b, double iw, bool clamp_output) {
  const double raw = b.score_a + static_cast<double>(b.wrong_important) * iw * b.dw;
  return clamp_output ? std::clamp(raw, 0.0, 1.0) : raw;
}

CollapsedPair collapse_spelled_spans(const AnnotatedUtterance &ref,
                                     std::span<const Token> hyp,
                                     const AlignmentResult &raw) {
  CollapsedPair out;
  // Hypothesis region [begin, end) for each span, by position in ops.
  std::vector<std::pair<std::size_t, std::size_t>> regions;
  regions.reserve(ref.spelled_spans.size());
  for (const auto &span : ref.spelled_spans) {
    std::size_t first_op = raw.ops.size();
    std::size_t last_op = 0;
    for (std::size_t k = 0; k < raw.ops.size(); ++k) {
      const auto &ri = raw.ops[k].ref_index;
      if (ri && *ri >= span.start && *ri < span.end) {
        first_op = std::min(first_op, k);
        last_op = k;
      }
    }
    std::size_t begin = hyp.size();
    std::size_t end = 0;
    for (std::size_t k = first_op; k <= last_op && k < raw.ops.size(); ++k) {
      if (const auto &hi = raw.ops[k].hyp_index) {
        begin = std::min(begin, *hi);
        end = std::max(end, *hi + 1);
      }
    }
    if (end <= begin) begin = end = 0;
    regions.emplace_back(begin, end);
  }

  std::size_t s = 0;
  for (std::size_t i = 0; i < ref.tokens.size();) {
    if (s < ref.spelled_spans.size() && ref.spelled_spans[s].start == i) {
      const auto &span = ref.spelled_spans[s];
      std::string text = span.canonical;
      if (text.empty()) {
        for (std::size_t k = span.start; k < span.end; ++k) text += ref.tokens[k].text;
      }
      out.ref.push_back(Token{std::move(text), out.ref.size()});
      out.ref_tags.push_back(TagClass::SE);
      out.ref_span_map.emplace_back(span.start, span.end);
      i = span.end;
      ++s;
      continue;
    }
    out.ref.push_back(Token{ref.tokens[i].text, out.ref.size()});
    out.ref_tags.push_back(ref.tags[i]);
    out.ref_span_map.emplace_back(i, i + 1);
    ++i;
  }

  for (std::size_t j = 0; j < hyp.size();) {
    auto region = std::find_if(regions.begin(), regions.end(), [j](const auto &r) {
      return r.second > r.first && r.first == j;
    });
    if (region != regions.end()) {
      std::string text;
      for (std::size_t k = region->first; k < region->second; ++k) text += hyp[k].text;
      out.hyp.push_back(Token{std::move(text), out.hyp.size()});
      out.hyp_span_map.emplace_back(region->first, region->second);
      j = region->second;
      continue;
    }
    out.hyp.push_back(Token{hyp[j].text, out.hyp.size()});
    out.hyp_span_map.emplace_back(j, j + 1);
    ++j;
  }
  return out;
}

CollapsedPair collapse_spelled_spans(const AnnotatedUtterance &ref,
                                     std::span<const Token> hyp) {
  return collapse_spelled_spans(ref, hyp, align_words(ref.tokens, hyp));
}

SwerBreakdown score_utterance(const AnnotatedUtterance &ref,
                              std::span<const Token> hyp, const SwerConfig &cfg,
                              const SimilarityOracle &sim) {
  if (ref.tokens.empty()) {
    throw Error(ErrorCode::EmptyReference, ref.id + ": empty reference");
  }
  if (ref.spelled_spans.empty()) {
    const auto a = align_words(ref.tokens, hyp);
    return swer_score(a, ref.tokens, ref.tags, hyp, cfg, sim);
  }
  const auto collapsed = collapse_spelled_spans(ref, hyp);
  const auto a = align_words(collapsed.ref, collapsed.hyp);
  return swer_score(a, collapsed.ref, collapsed.ref_tags, collapsed.hyp, cfg, sim);
}

}  // namespace swerkit

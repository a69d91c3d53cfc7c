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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "swerkit/error.hpp"
#include "swerkit/metrics.hpp"
#include "swerkit/swer.hpp"

using namespace swerkit;

namespace {

TableSimilarity trio_similarity() {
  TableSimilarity sim(0.0);
  sim.set("you", "u", 0.3);
  sim.set("loves", "love", 0.85);
  return sim;
}

SwerBreakdown score(const AnnotatedUtterance &ref, std::string_view hyp,
                    const SimilarityOracle &sim, SwerConfig cfg = {}) {
  auto h = tokenize(hyp);
  return score_utterance(ref, h, cfg, sim);
}

}  // namespace

TEST_CASE("WER vs SWER examples") {
  auto sim = trio_similarity();
  const std::size_t paris[] = {5};
  const std::size_t switzerland[] = {2};

  auto row1 = score(make_annotated("r1", "what did you do in paris", paris), "what did u do in phariz", sim);
  CHECK(row1.score_a == doctest::Approx(2.0 / 6.0));
  CHECK(row1.wrong_important == 1);
  CHECK(row1.accuracy == doctest::Approx(4.0 / 6.0));
  CHECK(row1.dw == doctest::Approx((4.0 / 6.0) / 5.0));
  CHECK(row1.swer == doctest::Approx(7.0 / 15.0));

  auto row2 = score(make_annotated("r2", "i love switzerland", switzerland), "i love switjerlan", sim);
  CHECK(row2.score_a == doctest::Approx(1.0 / 3.0));
  CHECK(row2.swer == doctest::Approx(2.0 / 3.0));

  auto row3 = score(make_annotated("r3", "ram loves sita"), "ram love sita", sim);
  CHECK(row3.score_a == 0.0);
  CHECK(row3.wrong_important == 0);
  CHECK(row3.swer == 0.0);
  REQUIRE(row3.trace.size() == 1);
  CHECK(row3.trace[0].reason == Reason::SimAbove);
}

TEST_CASE("substitution weights") {
  auto sim = trio_similarity();
  SwerConfig cfg;
  Token paris{"paris", 0};
  Token phariz{"phariz", 0};
  CHECK(substitution_weight(paris, TagClass::NE, phariz, cfg, sim).weight == 1.0);
  CHECK(substitution_weight(paris, TagClass::SENT, phariz, cfg, sim).reason == Reason::Sentiment);
  auto se = substitution_weight({"harvey", 0}, TagClass::SE, {"hrvey", 0}, cfg, sim);
  CHECK(se.weight == doctest::Approx(1.0 / 6.0));
  CHECK(se.reason == Reason::SpelledCer);
  CHECK(substitution_weight({"loves", 0}, TagClass::Plain, {"love", 0}, cfg, sim).weight == 0.0);
  CHECK(substitution_weight({"you", 0}, TagClass::Plain, {"u", 0}, cfg, sim).weight == 1.0);
}

TEST_CASE("similarity exactly at the threshold is free") {
  TableSimilarity sim(0.0);
  sim.set("a", "b", 0.6);
  SwerConfig cfg;
  auto d = substitution_weight({"a", 0}, TagClass::Plain, {"b", 0}, cfg, sim);
  CHECK(d.weight == 0.0);
  CHECK(d.reason == Reason::SimAbove);
}

TEST_CASE("deletion and insertion weights") {
  SwerConfig cfg;
  CHECK(deletion_weight({"paris", 0}, TagClass::NE, cfg).weight == 1.0);
  CHECK(deletion_weight({"harvey", 0}, TagClass::SE, cfg).weight == 1.0);
  auto plain = deletion_weight({"the", 0}, TagClass::Plain, cfg);
  CHECK(plain.weight == 1.0);
  CHECK(plain.reason == Reason::PlainDel);
  CHECK(insertion_weight(cfg, 10) == doctest::Approx(0.1));

  // A plain deletion in a ten-word reference adds 1/10 to score_a.
  TableSimilarity sim;
  auto ref = make_annotated("d", "one two three four five six seven eight nine ten");
  auto b = score(ref, "one two three four six seven eight nine ten", sim);
  CHECK(b.score_a == doctest::Approx(0.1));
  // An NE deletion counts as a wrong important word.
  const std::size_t ne[] = {4};
  auto ref_ne = make_annotated("d", "one two three four five six seven eight nine ten", ne);
  auto b_ne = score(ref_ne, "one two three four six seven eight nine ten", sim);
  CHECK(b_ne.wrong_important == 1);
}

TEST_CASE("insertions contribute 1/N_h each") {
  TableSimilarity sim;
  auto ref = make_annotated("i", "a b c d e f g h i");
  auto one = score(ref, "a b c d e f g h i x", sim);
  CHECK(one.score_a == doctest::Approx(0.1));
  // All-hypothesis insertions sum to one: "z" is substituted, the rest insert.
  auto ref1 = make_annotated("i", "z");
  auto many = score(ref1, "z q q q", sim);
  CHECK(many.score_a == doctest::Approx(3.0 / 4.0));
}

TEST_CASE("spelled-out names") {
  TableSimilarity sim;
  const std::size_t ne[] = {3};
  const SpelledSpan span[] = {{6, 12, "harvey"}};
  auto ref = make_annotated("h", "My name is harvey spelled as h. a. r. v. e. y.", ne, {}, span);

  auto collapsed = collapse_spelled_spans(ref, tokenize("my name is hurdy spelled as age a. r. v. e. y."));
  REQUIRE(collapsed.ref.size() == 7);
  CHECK(collapsed.ref[6].text == "harvey");
  CHECK(collapsed.ref_tags[6] == TagClass::SE);
  REQUIRE(collapsed.hyp.size() == 7);
  CHECK(collapsed.hyp[6].text == "agearvey");
  CHECK(collapsed.hyp_span_map[6] == std::pair<std::size_t, std::size_t>{6, 12});

  // Hyp1: nothing spelled. NE substitution + SE deletion over 7 units.
  auto hyp1 = score(ref, "My name is hurdy spelled as", sim);
  CHECK(hyp1.ref_len == 7);
  CHECK(hyp1.score_a == doctest::Approx(2.0 / 7.0));
  CHECK(hyp1.wrong_important == 1);
  CHECK(hyp1.swer == doctest::Approx(17.0 / 42.0));

  // Hyp2: NE substitution + cer("harvey", "agearvey") = 0.5.
  auto hyp2 = score(ref, "My name is hurdy spelled as age a. r. v. e. y.", sim);
  CHECK(hyp2.score_a == doctest::Approx(1.5 / 7.0));
  CHECK(hyp2.swer == doctest::Approx(29.0 / 84.0));
  CHECK(hyp2.swer < hyp1.swer);

  auto perfect = score(ref, "my name is harvey spelled as h a r v e y", sim);
  CHECK(perfect.swer == 0.0);
  CHECK(perfect.trace.empty());
}

TEST_CASE("spelled forgiveness threshold") {
  TableSimilarity sim;
  const SpelledSpan span[] = {{2, 5, ""}};
  auto ref = make_annotated("s", "call me b. o. b.", {}, {}, span);
  SwerConfig strict;
  SwerConfig relaxed;
  relaxed.char_sub_threshold = 1;
  auto s = score(ref, "call me b. o. p.", sim, strict);
  auto r = score(ref, "call me b. o. p.", sim, relaxed);
  CHECK(s.score_a == doctest::Approx((1.0 / 3.0) / 3.0));
  CHECK(r.score_a == 0.0);
}

TEST_CASE("annotation validation") {
  const std::size_t out_of_range[] = {7};
  CHECK_THROWS_AS(make_annotated("x", "a b c d e f", out_of_range), Error);
  const std::size_t both[] = {1};
  CHECK_THROWS_AS(make_annotated("x", "a b c", both, both), Error);
  const SpelledSpan overlap[] = {{0, 2, ""}, {1, 3, ""}};
  CHECK_THROWS_AS(make_annotated("x", "a b c", {}, {}, overlap), Error);
  const SpelledSpan empty_span[] = {{1, 1, ""}};
  CHECK_THROWS_AS(make_annotated("x", "a b c", {}, {}, empty_span), Error);
}

TEST_CASE("config validation") {
  SwerConfig cfg;
  cfg.iw = 0.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.iw = 1.0;
  cfg.sim_threshold = 1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.sim_threshold = 0.6;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("degenerate dw denominator") {
  TableSimilarity sim;
  const std::size_t ne[] = {0};
  auto b = score(make_annotated("x", "paris", ne), "phariz", sim);
  CHECK(b.wrong_important == 1);
  CHECK(b.dw == 0.0);
  CHECK(b.swer == 1.0);
  CHECK_THROWS_AS(score(make_annotated("x", "..."), "a", sim), Error);
}

TEST_CASE("clamping") {
  TableSimilarity sim;
  const std::size_t ne[] = {0, 1};
  auto ref = make_annotated("c", "paris london the", ne);
  SwerConfig cfg;
  cfg.iw = 3.0;
  auto clamped = score(ref, "x y the", sim, cfg);
  CHECK(clamped.swer == 1.0);
  cfg.clamp_output = false;
  auto raw = score(ref, "x y the", sim, cfg);
  // score_a 2/3, dw (1/3)/1, two wrong entities at iw 3.
  CHECK(raw.swer == doctest::Approx(2.0 / 3.0 + 2.0 * 3.0 * (1.0 / 3.0)));
  CHECK(swer_at_iw(raw, 1.0, false) == doctest::Approx(2.0 / 3.0 + 2.0 / 3.0));
}

TEST_CASE("property: bounded, zero on identity, monotone in iw") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    auto c = gen::random_case(rng, 12, true);
    auto sim = gen::random_similarity(rng);
    double prev_raw = -1.0;
    for (double iw : {1.0, 2.0, 3.0}) {
      SwerConfig cfg;
      cfg.iw = iw;
      auto b = score_utterance(c.ref, c.hyp, cfg, sim);
      CHECK(b.swer >= 0.0);
      CHECK(b.swer <= 1.0);
      if (b.wrong_important >= 1) CHECK(b.swer_unclamped >= prev_raw);
      prev_raw = b.swer_unclamped;
    }
    auto self = score_utterance(c.ref, c.ref.tokens, SwerConfig{}, sim);
    CHECK(self.swer == 0.0);
  }
}

TEST_CASE("property: reduces to WER without tags, similarity or insertions") {
  std::mt19937_64 rng(17);
  TableSimilarity never_similar(0.0);
  for (int trial = 0; trial < 1000; ++trial) {
    auto c = gen::random_case(rng, 15, false, false, false);
    auto b = score_utterance(c.ref, c.hyp, SwerConfig{}, never_similar);
    auto a = align_words(c.ref.tokens, c.hyp);
    CHECK(std::abs(b.swer - wer(a)) <= 1e-12);
  }
}

TEST_CASE("property: tagging a token NE never lowers SWER") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    auto c = gen::random_case(rng, 10, true, true, false);
    auto sim = gen::random_similarity(rng);
    for (std::size_t p = 0; p < c.ref.tokens.size(); ++p) {
      if (c.ref.tags[p] != TagClass::Plain) continue;
      auto tagged = c.ref;
      tagged.tags[p] = TagClass::NE;
      for (double iw : {1.0, 2.0, 3.0}) {
        SwerConfig cfg;
        cfg.iw = iw;
        auto before = score_utterance(c.ref, c.hyp, cfg, sim);
        auto after = score_utterance(tagged, c.hyp, cfg, sim);
        CHECK(after.swer >= before.swer - 1e-12);
      }
    }
  }
}

TEST_CASE("property: trace covers every non-match op once") {
  std::mt19937_64 rng(31);
  const std::set<std::string> reasons = {"entity",    "sentiment", "spelled-cer", "sim-below",
                                         "sim-above", "plain-del", "ins"};
  for (int trial = 0; trial < 2000; ++trial) {
    auto c = gen::random_case(rng, 12, true);
    auto sim = gen::random_similarity(rng);
    auto b = score_utterance(c.ref, c.hyp, SwerConfig{}, sim);
    std::vector<Token> ref = c.ref.tokens;
    std::vector<Token> hyp = c.hyp;
    std::vector<TagClass> tags = c.ref.tags;
    if (!c.ref.spelled_spans.empty()) {
      auto cp = collapse_spelled_spans(c.ref, c.hyp);
      ref = cp.ref;
      hyp = cp.hyp;
      tags = cp.ref_tags;
    }
    auto a = align_words(ref, hyp);
    REQUIRE(b.trace.size() == a.errors());
    double sum = 0.0;
    for (std::size_t k = 0, t = 0; k < a.ops.size(); ++k) {
      if (a.ops[k].kind == EditKind::Match) continue;
      CHECK(b.trace[t].op == a.ops[k]);
      CHECK(reasons.count(std::string(to_string(b.trace[t].reason))) == 1);
      sum += b.trace[t].contribution;
      ++t;
    }
    CHECK(sum == doctest::Approx(b.score_a));
  }
}

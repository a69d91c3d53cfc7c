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

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "swerkit/corpus.hpp"
#include "swerkit/error.hpp"

using namespace swerkit;

namespace {

std::string data_path(const std::string &name) { return std::string(SWERKIT_TEST_DATA_DIR) + "/" + name; }

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("conll: EU rejects German call") {
  std::ifstream in(data_path("eu_rejects.conll"));
  auto parsed = parse_conll(in);
  REQUIRE(parsed.sentences.size() == 1);
  CHECK(parsed.issues.empty());
  auto u = to_annotated(parsed.sentences[0], "s1");
  // The trailing "." is punctuation and is dropped.
  CHECK(u.tokens.size() == 8);
  CHECK(annotation_of(u).ne == std::vector<std::size_t>{0, 2, 6});
  CHECK(u.entity_count() == 3);
}

TEST_CASE("conll: empty stream and boundaries") {
  std::istringstream empty;
  auto none = parse_conll(empty);
  CHECK(none.sentences.empty());
  CHECK(none.issues.empty());

  std::istringstream two("a O\nb I-PER\n\n\nc O\n");
  auto p = parse_conll(two);
  REQUIRE(p.sentences.size() == 2);
  CHECK(p.sentences[0].tokens.size() == 2);
  CHECK(p.sentences[1].tokens.size() == 1);

  std::istringstream docs("-DOCSTART- -X- O O\n\na O\n-DOCSTART- -X- O O\nb O\n");
  auto d = parse_conll(docs);
  CHECK(d.documents == 2);
  REQUIRE(d.sentences.size() == 2);
  CHECK(d.sentences[0].document == 1);
  CHECK(d.sentences[1].document == 2);

  std::istringstream only_doc("-DOCSTART- -X- O O\n");
  CHECK(parse_conll(only_doc).sentences.empty());
}

TEST_CASE("conll: malformed lines are reported and skipped") {
  std::istringstream in("good O\nlonely\nbad Q-PER\nfine B-LOC\n");
  auto p = parse_conll(in);
  REQUIRE(p.sentences.size() == 1);
  CHECK(p.sentences[0].tokens.size() == 2);
  REQUIRE(p.issues.size() == 2);
  CHECK(p.issues[0].line_no == 2);
  CHECK(p.issues[1].line_no == 3);
}

TEST_CASE("conll: validation fixture") {
  std::ifstream in(data_path("validation60.conll"));
  auto p = parse_conll(in);
  REQUIRE(p.sentences.size() == 60);
  std::size_t counts[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < p.sentences.size(); ++i) {
    auto u = to_annotated(p.sentences[i], "v" + std::to_string(i));
    REQUIRE(u.entity_count() <= 3);
    ++counts[u.entity_count()];
  }
  CHECK(counts[1] == 20);
  CHECK(counts[2] == 20);
  CHECK(counts[3] == 20);
}

TEST_CASE("conll: arbitrary bytes never throw") {
  std::mt19937_64 rng(5);
  const std::string alphabet = "ab O I-PER B-X -DOCSTART-\n\n\t.\xff";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    std::size_t len = rng() % 200;
    for (std::size_t k = 0; k < len; ++k) {
      s.push_back((rng() % 8 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()]);
    }
    std::istringstream in(s);
    CHECK_NOTHROW(parse_conll(in));
  }
}

TEST_CASE("to_annotated rejects an all-punctuation sentence") {
  ConllSentence s;
  s.tokens.push_back({".", "O"});
  CHECK(code_of([&] { to_annotated(s, "x"); }) == ErrorCode::EmptyReference);
}

TEST_CASE("transcripts: trn and json lines") {
  std::istringstream trn("hello world (a)\n\nsecond line here (b)\n");
  auto t = read_transcripts(trn);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == TranscriptRecord{"a", "hello world"});
  CHECK(t[1].id == "b");

  std::istringstream jl("{\"id\": \"x\", \"text\": \"one two\"}\n{\"id\": \"y\", \"text\": \"\"}\n");
  auto j = read_transcripts(jl);
  REQUIRE(j.size() == 2);
  CHECK(j[0].text == "one two");
  CHECK(j[1].text.empty());

  std::istringstream dup("a (x)\nb (x)\n");
  CHECK(code_of([&] { read_transcripts(dup); }) == ErrorCode::DuplicateId);
  std::istringstream bad("no id here\n");
  CHECK(code_of([&] { read_transcripts(bad); }) == ErrorCode::MalformedLine);
  std::istringstream bad_json("{\"id\": 3}\n");
  CHECK(code_of([&] { read_transcripts(bad_json); }) == ErrorCode::MalformedLine);
}

TEST_CASE("transcripts round trip") {
  std::vector<TranscriptRecord> recs = {{"a", "hello world"}, {"b", "x"}};
  for (auto fmt : {TranscriptFormat::Trn, TranscriptFormat::JsonLines}) {
    std::ostringstream out;
    write_transcripts(out, recs, fmt);
    std::istringstream in(out.str());
    auto back = read_transcripts(in);
    CHECK(back == recs);
    std::ostringstream again;
    write_transcripts(again, back, fmt);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("annotations round trip") {
  std::vector<AnnotationRecord> recs = {{"a", {0, 2}, {1}, {}}, {"b", {}, {}, {{3, 9, "harvey"}}}};
  std::ostringstream out;
  write_annotations(out, recs);
  std::istringstream in(out.str());
  auto back = read_annotations(in);
  REQUIRE(back.size() == 2);
  CHECK(back.at("a") == recs[0]);
  CHECK(back.at("b") == recs[1]);
  CHECK(out.str().rfind("{\"id\":\"a\",\"ne\":[0,2],\"sent\":[1],\"spelled\":[]}", 0) == 0);
}

TEST_CASE("references joined with annotations") {
  std::ifstream ref(data_path("trio.ref.trn"));
  std::ifstream ann(data_path("trio.ann.jsonl"));
  auto refs = read_references(ref, &ann);
  REQUIRE(refs.size() == 3);
  CHECK(refs[0].id == "t1-1");
  CHECK(refs[0].tags[5] == TagClass::NE);
  CHECK(refs[2].entity_count() == 0);

  std::istringstream r("a b c d e f (x)\n");
  std::istringstream bad_index("{\"id\": \"x\", \"ne\": [7]}\n");
  CHECK(code_of([&] { read_references(r, &bad_index); }) == ErrorCode::ConflictingAnnotation);

  std::istringstream r2("a b (x)\n");
  std::istringstream orphan("{\"id\": \"y\", \"ne\": [0]}\n");
  CHECK(code_of([&] { read_references(r2, &orphan); }) == ErrorCode::MissingReference);

  std::istringstream r3("... (x)\n");
  CHECK(code_of([&] { read_references(r3, nullptr); }) == ErrorCode::EmptyReference);
}

TEST_CASE("pairs: joins on id and warns about missing hypotheses") {
  std::istringstream ref("b one (b)\na one two (a)\n");
  std::istringstream hyp("one (a)\n");
  auto p = parse_pairs(ref, hyp, nullptr);
  REQUIRE(p.pairs.size() == 2);
  CHECK(p.pairs[0].id == "a");
  CHECK(p.pairs[0].hypothesis.size() == 1);
  CHECK(p.pairs[1].hypothesis.empty());
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("b") != std::string::npos);

  std::istringstream ref2("x (a)\n");
  std::istringstream hyp2("x (a)\ny (z)\n");
  CHECK(code_of([&] { parse_pairs(ref2, hyp2, nullptr); }) == ErrorCode::MissingReference);
}

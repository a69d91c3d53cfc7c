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

#include <cmath>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "swerkit/embeddings.hpp"
#include "swerkit/error.hpp"

using namespace swerkit;

namespace {

EmbeddingLexicon fixture() { return load_text_vectors_file(SWERKIT_TEST_DATA_DIR "/fixture.vec"); }

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

TEST_CASE("load without header") {
  std::istringstream in("cat 1 0 0\ndog 0 1 0\n");
  auto lex = load_text_vectors(in);
  CHECK(lex.size() == 2);
  CHECK(lex.dim() == 3);
  CHECK_FALSE(lex.load_summary().had_header);
}

TEST_CASE("load with count/dim header") {
  std::ostringstream text;
  text << "400000 50\n";
  for (const char *w : {"a", "b", "c"}) {
    text << w;
    for (int i = 0; i < 50; ++i) text << ' ' << (i + 1) * 0.01;
    text << '\n';
  }
  std::istringstream in(text.str());
  auto lex = load_text_vectors(in);
  CHECK(lex.dim() == 50);
  CHECK(lex.size() == 3);
  CHECK(lex.load_summary().had_header);
  const auto *v = lex.find("b");
  REQUIRE(v != nullptr);
  CHECK((*v)[49] == doctest::Approx(0.5));
}

TEST_CASE("malformed lines are skipped, duplicates keep the first vector") {
  std::istringstream in("cat 1 0\nbad x 1\ndog 0 1\ncat 5 5\nlonely\n");
  auto lex = load_text_vectors(in);
  CHECK(lex.size() == 2);
  CHECK(lex.load_summary().malformed == 2);
  CHECK(lex.load_summary().duplicates == 1);
  CHECK((*lex.find("cat"))[0] == 1.0f);
}

TEST_CASE("fatal load errors") {
  std::istringstream ragged("cat 1 0 0\ndog 0 1\n");
  CHECK(code_of([&] { load_text_vectors(ragged); }) == ErrorCode::InconsistentDimension);
  std::istringstream header_mismatch("2 4\ncat 1 0 0\n");
  CHECK(code_of([&] { load_text_vectors(header_mismatch); }) == ErrorCode::InconsistentDimension);
  std::istringstream empty("");
  CHECK(code_of([&] { load_text_vectors(empty); }) == ErrorCode::EmptyLexicon);
  std::istringstream junk("a b c\n");
  CHECK(code_of([&] { load_text_vectors(junk); }) == ErrorCode::EmptyLexicon);
}

TEST_CASE("load is deterministic") {
  const std::string text = "x 1 2\ny 3 4\nx 9 9\nz q 1\n";
  std::istringstream a(text);
  std::istringstream b(text);
  auto la = load_text_vectors(a);
  auto lb = load_text_vectors(b);
  CHECK(la.words() == lb.words());
  for (const auto &w : la.words()) CHECK(*la.find(w) == *lb.find(w));
  CHECK(la.load_summary().malformed == lb.load_summary().malformed);
  CHECK(la.load_summary().duplicates == lb.load_summary().duplicates);
}

TEST_CASE("cosine") {
  std::vector<float> v{0.5f, -2.0f, 3.0f};
  CHECK(cosine(v, v) == doctest::Approx(1.0));
  std::vector<float> e1{1, 0, 0};
  std::vector<float> e2{0, 1, 0};
  CHECK(cosine(e1, e2) == 0.0);
  std::vector<float> u{1, 2, 3};
  std::vector<float> w{4, 5, 6};
  CHECK(cosine(u, w) == doctest::Approx(32.0 / (std::sqrt(14.0) * std::sqrt(77.0))));
  CHECK(cosine(u, w) == doctest::Approx(0.9746318).epsilon(1e-6));
  std::vector<float> zero{0, 0, 0};
  CHECK(cosine(zero, u) == 0.0);
  std::vector<float> short_v{1, 2};
  CHECK(code_of([&] { cosine(u, short_v); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("similarity") {
  EmbeddingLexicon empty;
  CHECK(similarity("go", "go", empty, OovPolicy::Dissimilar) == 1.0);
  CHECK(similarity("go", "went", empty, OovPolicy::Dissimilar) == 0.0);

  auto lex = fixture();
  CHECK(similarity("go", "goes", lex, OovPolicy::Dissimilar) >= 0.6);
  CHECK(similarity("tortoise", "rise", lex, OovPolicy::Dissimilar) < 0.6);
  CHECK(similarity("you", "u", lex, OovPolicy::Dissimilar) == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(similarity("loves", "love", lex, OovPolicy::Dissimilar) ==
        doctest::Approx(0.85).epsilon(1e-6));
  // Negative cosine is floored.
  CHECK(similarity("good", "bad", lex, OovPolicy::Dissimilar) == 0.0);
  // One side out of vocabulary.
  CHECK(similarity("you", "yu", lex, OovPolicy::Dissimilar) == 0.0);
  CHECK(similarity("you", "yu", lex, OovPolicy::CharFallback) == doctest::Approx(2.0 / 3.0));
  CHECK(similarity("harvey", "hrvey", lex, OovPolicy::CharFallback) == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("similarity is symmetric, reflexive and in range") {
  auto lex = fixture();
  std::vector<std::string> vocab = {"you", "u", "loves", "love", "go", "goes", "tortoise",
                                    "rise", "good", "bad", "oov", "o", "ovo", "harvey", ""};
  for (auto policy : {OovPolicy::Dissimilar, OovPolicy::CharFallback}) {
    for (const auto &a : vocab) {
      CHECK(similarity(a, a, lex, policy) == 1.0);
      for (const auto &b : vocab) {
        const double ab = similarity(a, b, lex, policy);
        CHECK(ab == similarity(b, a, lex, policy));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
      }
    }
  }
}

TEST_CASE("lookup statistics survive concurrent readers") {
  auto lex = fixture();
  lex.reset_stats();
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&lex] {
      for (int i = 0; i < 1000; ++i) {
        lex.find("you");
        lex.find("missing");
      }
    });
  }
  for (auto &t : pool) t.join();
  CHECK(lex.lookups() == 16000);
  CHECK(lex.misses() == 8000);
}

TEST_CASE("table similarity") {
  TableSimilarity sim;
  sim.set("you", "u", 0.3);
  CHECK(sim.similarity("u", "you") == 0.3);
  CHECK(sim.similarity("a", "a") == 1.0);
  CHECK(sim.similarity("a", "b") == 0.0);
}

TEST_CASE("oov policy names") {
  CHECK(parse_oov_policy("char-fallback") == OovPolicy::CharFallback);
  CHECK(to_string(parse_oov_policy("dissimilar")) == "dissimilar");
  CHECK(code_of([] { parse_oov_policy("nope"); }) == ErrorCode::InvalidConfig);
}

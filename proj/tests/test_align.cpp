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
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swerkit/align.hpp"
#include "swerkit/text.hpp"

using namespace swerkit;

namespace {

std::vector<std::string> words(std::initializer_list<const char *> w) {
  return {w.begin(), w.end()};
}

void check_bookkeeping(const AlignmentResult &a) {
  CHECK(a.hits + a.subs + a.dels == a.ref_len);
  CHECK(a.hits + a.subs + a.ins == a.hyp_len);
  std::vector<int> ref_seen(a.ref_len, 0);
  std::vector<int> hyp_seen(a.hyp_len, 0);
  for (const auto &op : a.ops) {
    switch (op.kind) {
      case EditKind::Match:
      case EditKind::Substitute:
        REQUIRE(op.ref_index.has_value());
        REQUIRE(op.hyp_index.has_value());
        break;
      case EditKind::Delete:
        REQUIRE(op.ref_index.has_value());
        REQUIRE_FALSE(op.hyp_index.has_value());
        break;
      case EditKind::Insert:
        REQUIRE_FALSE(op.ref_index.has_value());
        REQUIRE(op.hyp_index.has_value());
        break;
    }
    if (op.ref_index) ++ref_seen[*op.ref_index];
    if (op.hyp_index) ++hyp_seen[*op.hyp_index];
  }
  for (int c : ref_seen) CHECK(c == 1);
  for (int c : hyp_seen) CHECK(c == 1);
}

}  // namespace

TEST_CASE("paris example aligns with two substitutions") {
  auto ref = words({"what", "did", "you", "do", "in", "paris"});
  auto hyp = words({"what", "did", "u", "do", "in", "phariz"});
  auto a = align_words(ref, hyp);
  CHECK(a.subs == 2);
  CHECK(a.dels == 0);
  CHECK(a.ins == 0);
  CHECK(a.hits == 4);
  REQUIRE(a.ops.size() == 6);
  CHECK(a.ops[2] == EditOp{EditKind::Substitute, 2, 2});
  CHECK(a.ops[5] == EditOp{EditKind::Substitute, 5, 5});
}

TEST_CASE("identity alignment is all matches") {
  auto x = words({"the", "cat", "sat", "on", "the", "mat"});
  auto a = align_words(x, x);
  CHECK(a.hits == x.size());
  CHECK(a.errors() == 0);
  for (const auto &op : a.ops) CHECK(op.kind == EditKind::Match);
}

TEST_CASE("abc vs bcd needs two edits") {
  auto a = words({"a", "b", "c"});
  auto b = words({"b", "c", "d"});
  auto r = align_words(a, b);
  CHECK(r.errors() == oracle::naive_edit_distance(a, b));
  CHECK(r.errors() == 2);
  check_bookkeeping(r);
}

TEST_CASE("empty inputs") {
  std::vector<std::string> empty;
  auto a = align_words(empty, empty);
  CHECK(a.ops.empty());
  CHECK(a.errors() == 0);

  auto x = words({"x"});
  auto ins = align_words(empty, x);
  REQUIRE(ins.ops.size() == 1);
  CHECK(ins.ops[0] == EditOp{EditKind::Insert, std::nullopt, 0});

  auto del = align_words(x, empty);
  REQUIRE(del.ops.size() == 1);
  CHECK(del.ops[0] == EditOp{EditKind::Delete, 0, std::nullopt});
}

TEST_CASE("character alignment") {
  auto a = align_chars("harvey", "hrvey");
  CHECK(a.dels == 1);
  CHECK(a.subs == 0);
  CHECK(a.ins == 0);

  auto same = align_chars("harvey", "harvey");
  CHECK(same.hits == 6);
  CHECK(same.errors() == 0);

  // Brute-force check on the spelled-name case.
  std::string r = "harvey";
  std::string h = "agearvey";
  CHECK(oracle::naive_edit_distance(r, h) == 3);
  CHECK(char_edit_distance(r, h) == 3);
}

TEST_CASE("character alignment walks UTF-8 code points") {
  auto a = align_chars("caf\xC3\xA9", "cafe");
  CHECK(a.ref_len == 4);
  CHECK(a.subs == 1);
}

TEST_CASE("backtrace policy tie-breaks") {
  constexpr auto policy = backtrace_policy();
  CHECK(policy[0] == EditKind::Match);
  CHECK(policy[1] == EditKind::Substitute);
  CHECK(policy[2] == EditKind::Delete);
  CHECK(policy[3] == EditKind::Insert);

  auto sub = align_words(words({"a"}), words({"b"}));
  REQUIRE(sub.ops.size() == 1);
  CHECK(sub.ops[0].kind == EditKind::Substitute);

  auto first = align_words(words({"a", "a"}), words({"a"}));
  REQUIRE(first.ops.size() == 2);
  CHECK(first.ops[0] == EditOp{EditKind::Match, 0, 0});
  CHECK(first.ops[1] == EditOp{EditKind::Delete, 1, std::nullopt});
  for (int run = 0; run < 1000; ++run) {
    CHECK(align_words(words({"a", "a"}), words({"a"})) == first);
  }
}

TEST_CASE("optimality against exhaustive recursion, lengths up to 4") {
  // Every pair over a 3-symbol alphabet with length <= 4.
  std::vector<std::vector<std::string>> all{{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto &s : all) {
      if (s.size() != len - 1) continue;
      for (const char *c : {"a", "b", "c"}) {
        auto t = s;
        t.push_back(c);
        next.push_back(t);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  REQUIRE(all.size() == 121);
  std::size_t mismatches = 0;
  for (const auto &a : all) {
    for (const auto &b : all) {
      auto r = align_words(a, b);
      if (r.errors() != oracle::naive_edit_distance(a, b)) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("bookkeeping, symmetry and determinism on random pairs") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> sym(0, 4);
  const char *alphabet[] = {"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::string> a(len(gen));
    std::vector<std::string> b(len(gen));
    for (auto &w : a) w = alphabet[sym(gen)];
    for (auto &w : b) w = alphabet[sym(gen)];
    auto ab = align_words(a, b);
    auto ba = align_words(b, a);
    CHECK(ab.hits + ab.subs + ab.dels == ab.ref_len);
    CHECK(ab.hits + ab.subs + ab.ins == ab.hyp_len);
    CHECK(ab.errors() == ba.errors());
    if (trial % 100 == 0) {
      check_bookkeeping(ab);
      CHECK(align_words(a, b) == ab);
    }
  }
}

TEST_CASE("token overload matches string overload") {
  auto ref = tokenize("What did you do in Paris");
  auto hyp = tokenize("what did u do in phariz");
  auto a = align_words(std::span<const Token>(ref), std::span<const Token>(hyp));
  CHECK(a.subs == 2);
  CHECK(a.hits == 4);
}

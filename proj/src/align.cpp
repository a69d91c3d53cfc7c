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

#include "swerkit/align.hpp"

namespace swerkit {

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::Match:
      return "match";
    case EditKind::Substitute:
      return "sub";
    case EditKind::Delete:
      return "del";
    case EditKind::Insert:
      return "ins";
  }
  return "?";
}

namespace {

std::vector<std::string> texts(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace

AlignmentResult align_words(std::span<const Token> ref,
                            std::span<const Token> hyp) {
  // Token indices are positional, so comparing text alone is what matters.
  const auto r = texts(ref);
  const auto h = texts(hyp);
  return align_sequences<std::string>(r, h);
}

AlignmentResult align_words(std::span<const std::string> ref,
                            std::span<const std::string> hyp) {
  return align_sequences<std::string>(ref, hyp);
}

AlignmentResult align_chars(std::string_view ref, std::string_view hyp) {
  const auto r = split_chars(ref);
  const auto h = split_chars(hyp);
  return align_sequences<std::string>(r, h);
}

std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b) {
  return align_sequences<std::string>(a, b).errors();
}

std::size_t char_edit_distance(std::string_view a, std::string_view b) {
  return align_chars(a, b).errors();
}

}  // namespace swerkit

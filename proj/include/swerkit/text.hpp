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

#ifndef SWERKIT_TEXT_HPP
#define SWERKIT_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace swerkit {

struct Token {
  std::string text;
  std::size_t index = 0;

  friend bool operator==(const Token &, const Token &) = default;
};

// Normalization applied to every reference and hypothesis word:
//  - ASCII letters are lowercased (other bytes pass through untouched);
//  - a single letter followed only by periods ("h.", "A..") becomes the letter;
//  - a token made only of punctuation normalizes to the empty string and is
//    dropped by tokenize().
std::string normalize_word(std::string_view raw);

// Splits on whitespace, normalizes, drops empty results and numbers the
// surviving tokens 0..n-1.
std::vector<Token> tokenize(std::string_view text);

// Re-indexes already-normalized words.
std::vector<Token> make_tokens(const std::vector<std::string> &words);

std::vector<std::string> split_whitespace(std::string_view text);

// UTF-8 aware split into code points; invalid bytes become one unit each.
std::vector<std::string> split_chars(std::string_view word);

std::string join_tokens(const std::vector<Token> &tokens);

}  // namespace swerkit

#endif  // SWERKIT_TEXT_HPP

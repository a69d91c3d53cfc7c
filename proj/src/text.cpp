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

#include "swerkit/text.hpp"

#include <algorithm>

namespace swerkit {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(unsigned char c) {
  return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) ||
         (c >= 91 && c <= 96) || (c >= 123 && c <= 126);
}

bool is_ascii_alpha(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::string normalize_word(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (is_space(c)) continue;
    auto u = static_cast<unsigned char>(c);
    out.push_back(u >= 'A' && u <= 'Z' ? static_cast<char>(u - 'A' + 'a') : c);
  }
  if (std::all_of(out.begin(), out.end(), [](char c) {
        return is_ascii_punct(static_cast<unsigned char>(c));
      })) {
    return {};
  }
  if (out.size() >= 2 && is_ascii_alpha(static_cast<unsigned char>(out[0])) &&
      std::all_of(out.begin() + 1, out.end(), [](char c) { return c == '.'; })) {
    out.resize(1);
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  for (const auto &word : split_whitespace(text)) {
    auto norm = normalize_word(word);
    if (norm.empty()) continue;
    tokens.push_back(Token{std::move(norm), tokens.size()});
  }
  return tokens;
}

std::vector<Token> make_tokens(const std::vector<std::string> &words) {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (const auto &w : words) tokens.push_back(Token{w, tokens.size()});
  return tokens;
}

std::vector<std::string> split_chars(std::string_view word) {
  std::vector<std::string> chars;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t len = utf8_length(static_cast<unsigned char>(word[i]));
    if (i + len > word.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(word[i + k]) & 0xC0) != 0x80) {
        len = 1;
        break;
      }
    }
    chars.emplace_back(word.substr(i, len));
    i += len;
  }
  return chars;
}

std::string join_tokens(const std::vector<Token> &tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

}  // namespace swerkit

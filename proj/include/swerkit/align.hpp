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

#ifndef SWERKIT_ALIGN_HPP
#define SWERKIT_ALIGN_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swerkit/text.hpp"

namespace swerkit {

enum class EditKind { Match, Substitute, Delete, Insert };

std::string_view to_string(EditKind kind);

// Match/Substitute carry both indices, Delete only ref_index, Insert only
// hyp_index.
struct EditOp {
  EditKind kind = EditKind::Match;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  friend bool operator==(const EditOp &, const EditOp &) = default;
};

struct AlignmentResult {
  std::vector<EditOp> ops;
  std::size_t hits = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;

  std::size_t errors() const { return subs + dels + ins; }

  friend bool operator==(const AlignmentResult &,
                         const AlignmentResult &) = default;
};

/// Tie-break order used when several backtrace moves are optimal.
///
/// The cost table is filled over suffixes (from the sequence ends) and then
/// walked forward from the start, taking the first optimal move in this
/// order. A consequence worth knowing: for ref "a a" vs hyp "a", the first
/// reference "a" matches and the later one is deleted.
constexpr std::array<EditKind, 4> backtrace_policy() {
  return {EditKind::Match, EditKind::Substitute, EditKind::Delete,
          EditKind::Insert};
}

/// Unit-cost Levenshtein alignment with the fixed backtrace_policy().
template <typename T>
AlignmentResult align_sequences(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t stride = m + 1;
  // cost[i * stride + j] is the edit distance of ref[i..] vs hyp[j..].
  std::vector<std::uint32_t> cost((n + 1) * stride);
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint32_t &c = cost[i * stride + j];
      if (i == n) {
        c = static_cast<std::uint32_t>(m - j);
      } else if (j == m) {
        c = static_cast<std::uint32_t>(n - i);
      } else {
        std::uint32_t diag =
            cost[(i + 1) * stride + j + 1] + (ref[i] == hyp[j] ? 0u : 1u);
        std::uint32_t del = cost[(i + 1) * stride + j] + 1;
        std::uint32_t ins = cost[i * stride + j + 1] + 1;
        c = std::min(diag, std::min(del, ins));
      }
    }
  }

  AlignmentResult out;
  out.ref_len = n;
  out.hyp_len = m;
  out.ops.reserve(n + m);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const std::uint32_t here = cost[i * stride + j];
    if (i < n && j < m) {
      const std::uint32_t diag = cost[(i + 1) * stride + j + 1];
      if (ref[i] == hyp[j] && here == diag) {
        out.ops.push_back({EditKind::Match, i, j});
        ++out.hits;
        ++i;
        ++j;
        continue;
      }
      if (!(ref[i] == hyp[j]) && here == diag + 1) {
        out.ops.push_back({EditKind::Substitute, i, j});
        ++out.subs;
        ++i;
        ++j;
        continue;
      }
    }
    if (i < n && here == cost[(i + 1) * stride + j] + 1) {
      out.ops.push_back({EditKind::Delete, i, std::nullopt});
      ++out.dels;
      ++i;
      continue;
    }
    out.ops.push_back({EditKind::Insert, std::nullopt, j});
    ++out.ins;
    ++j;
  }
  return out;
}

AlignmentResult align_words(std::span<const Token> ref,
                            std::span<const Token> hyp);

AlignmentResult align_words(std::span<const std::string> ref,
                            std::span<const std::string> hyp);

// Aligns the code points of two words.
AlignmentResult align_chars(std::string_view ref, std::string_view hyp);

std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b);

std::size_t char_edit_distance(std::string_view a, std::string_view b);

}  // namespace swerkit

#endif  // SWERKIT_ALIGN_HPP

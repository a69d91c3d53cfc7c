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

#include "swerkit/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

#include "swerkit/error.hpp"

namespace swerkit {

double wer(const AlignmentResult &a) {
  if (a.ref_len == 0) {
    throw Error(ErrorCode::EmptyReference, "WER needs a non-empty reference");
  }
  return static_cast<double>(a.errors()) / static_cast<double>(a.ref_len);
}

namespace {

// Minimum of (S + D + I - min(t, S)) over all alignments of r and h.
std::size_t forgiving_char_distance(const std::vector<std::string> &r,
                                    const std::vector<std::string> &h,
                                    std::size_t t) {
  const std::size_t n = r.size();
  const std::size_t m = h.size();
  const std::size_t max_subs = std::min(n, m);
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  // best[(i * (m + 1) + j) * (max_subs + 1) + s]: fewest indels aligning
  // r[..i] with h[..j] using exactly s substitutions.
  const std::size_t layers = max_subs + 1;
  std::vector<std::size_t> best((n + 1) * (m + 1) * layers, kInf);
  auto at = [&](std::size_t i, std::size_t j, std::size_t s) -> std::size_t & {
    return best[(i * (m + 1) + j) * layers + s];
  };
  at(0, 0, 0) = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      for (std::size_t s = 0; s < layers; ++s) {
        std::size_t v = at(i, j, s);
        if (v == kInf) continue;
        if (i < n) at(i + 1, j, s) = std::min(at(i + 1, j, s), v + 1);
        if (j < m) at(i, j + 1, s) = std::min(at(i, j + 1, s), v + 1);
        if (i < n && j < m) {
          if (r[i] == h[j]) {
            at(i + 1, j + 1, s) = std::min(at(i + 1, j + 1, s), v);
          } else if (s + 1 < layers) {
            at(i + 1, j + 1, s + 1) = std::min(at(i + 1, j + 1, s + 1), v);
          }
        }
      }
    }
  }
  std::size_t out = kInf;
  for (std::size_t s = 0; s < layers; ++s) {
    std::size_t v = at(n, m, s);
    if (v == kInf) continue;
    out = std::min(out, v + s - std::min(t, s));
  }
  return out;
}

}  // namespace

double cer(std::string_view ref_word, std::string_view hyp_word,
           std::size_t char_sub_threshold) {
  const auto r = split_chars(ref_word);
  if (r.empty()) {
    throw Error(ErrorCode::EmptyReference, "CER needs a non-empty reference word");
  }
  const auto h = split_chars(hyp_word);
  std::size_t edits = char_sub_threshold == 0
                          ? align_sequences<std::string>(r, h).errors()
                          : forgiving_char_distance(r, h, char_sub_threshold);
  return std::min(1.0, static_cast<double>(edits) / static_cast<double>(r.size()));
}

WordInformation wip_wil(const AlignmentResult &a) {
  if (a.ref_len == 0) {
    throw Error(ErrorCode::EmptyReference, "WIP needs a non-empty reference");
  }
  WordInformation out;
  if (a.hyp_len == 0) return out;
  const double h = static_cast<double>(a.hits);
  out.wip = (h / static_cast<double>(a.ref_len)) * (h / static_cast<double>(a.hyp_len));
  out.wil = 1.0 - out.wip;
  return out;
}

double hwer_from_ratings(const RatingRecord &r) {
  if (r.ratings.empty()) {
    throw Error(ErrorCode::EmptyRatings, "no ratings for stimulus '" + r.stimulus_id + "'");
  }
  double sum = 0.0;
  for (int v : r.ratings) {
    if (v < 1 || v > 5) {
      throw Error(ErrorCode::InvalidRating, "rating " + std::to_string(v) +
                                                " outside 1..5 for stimulus '" +
                                                r.stimulus_id + "'");
    }
    sum += v;
  }
  return 1.0 - (sum / static_cast<double>(r.ratings.size())) / 5.0;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<RatingRecord> read_ratings_csv(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<std::string, std::vector<int>> grouped;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto comma = view.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::MalformedLine,
                  "ratings line " + std::to_string(line_no) + ": expected two columns");
    }
    auto id = trim(view.substr(0, comma));
    auto value = trim(view.substr(comma + 1));
    if (!header_seen) {
      if (id != "stimulus_id" || value != "rating") {
        throw Error(ErrorCode::MalformedLine,
                    "ratings header must be 'stimulus_id,rating'");
      }
      header_seen = true;
      continue;
    }
    int rating = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), rating);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw Error(ErrorCode::MalformedLine,
                  "ratings line " + std::to_string(line_no) + ": rating is not an integer");
    }
    if (rating < 1 || rating > 5) {
      throw Error(ErrorCode::InvalidRating,
                  "ratings line " + std::to_string(line_no) + ": rating outside 1..5");
    }
    grouped[std::string(id)].push_back(rating);
  }
  if (grouped.empty()) throw Error(ErrorCode::EmptyRatings, "ratings file has no rows");
  std::vector<RatingRecord> out;
  out.reserve(grouped.size());
  for (auto &[id, ratings] : grouped) out.push_back({id, std::move(ratings)});
  return out;
}

}  // namespace swerkit

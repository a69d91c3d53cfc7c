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

#ifndef SWERKIT_METRICS_HPP
#define SWERKIT_METRICS_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "swerkit/align.hpp"

namespace swerkit {

// (S + D + I) / N_r. Deliberately not clamped: insertions can push it past 1.
// Throws EmptyReference when the reference is empty.
double wer(const AlignmentResult &a);

// Character error rate of one word against another, clamped to 1.
//
// Up to char_sub_threshold character substitutions are forgiven. The
// alignment used is the one minimizing (S + D + I - min(threshold, S)), so a
// larger threshold can never raise the rate.
double cer(std::string_view ref_word, std::string_view hyp_word,
           std::size_t char_sub_threshold = 0);

struct WordInformation {
  double wip = 0.0;
  double wil = 1.0;
};

// WIP = (H / N_r) * (H / N_h), WIL = 1 - WIP. An empty hypothesis gives
// WIP = 0.
WordInformation wip_wil(const AlignmentResult &a);

struct RatingRecord {
  std::string stimulus_id;
  std::vector<int> ratings;  // each in 1..5
};

// 1 - mean(ratings) / 5, so the result lies in [0, 0.8].
double hwer_from_ratings(const RatingRecord &r);

// Reads `stimulus_id,rating` CSV (header required) and groups rows by
// stimulus. Records come back sorted by stimulus_id.
std::vector<RatingRecord> read_ratings_csv(std::istream &in);

}  // namespace swerkit

#endif  // SWERKIT_METRICS_HPP

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

#ifndef SWERKIT_REPORT_HPP
#define SWERKIT_REPORT_HPP

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swerkit/corpus.hpp"
#include "swerkit/injector.hpp"
#include "swerkit/swer.hpp"

namespace swerkit {

struct UtteranceScore {
  std::string id;
  Bucket bucket = Bucket::Other;
  std::size_t entities = 0;
  // Word-level counts over the uncollapsed, normalized tokens.
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
  std::size_t hits = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;
  double wer = 0.0;
  double wip = 0.0;
  double wil = 0.0;
  SwerBreakdown swer;
};

UtteranceScore score_pair(const ScoringPair &pair, const SwerConfig &cfg,
                          const SimilarityOracle &sim);

// Scores every pair on `jobs` threads; rows come back sorted by id whatever
// the scheduling.
std::vector<UtteranceScore> score_pairs(std::span<const ScoringPair> pairs,
                                        const SwerConfig &cfg,
                                        const SimilarityOracle &sim,
                                        std::size_t jobs = 1);

struct BucketStat {
  Bucket bucket = Bucket::Other;
  std::size_t count = 0;
  double mean_wer = 0.0;
  double mean_swer = 0.0;
};

struct Aggregates {
  std::size_t utterances = 0;
  std::size_t total_ref_words = 0;
  std::size_t total_errors = 0;
  double micro_wer = 0.0;  // pooled: total errors / total reference words
  double macro_wer = 0.0;  // mean of per-utterance WER
  double macro_wil = 0.0;
  double macro_swer = 0.0;
  std::vector<BucketStat> buckets;  // non-empty buckets, Cat-I..Other
};

struct CorpusReport {
  int report_version = 1;
  SwerConfig config;
  std::vector<UtteranceScore> rows;
  Aggregates aggregates;
};

Aggregates aggregate(std::span<const UtteranceScore> rows);
CorpusReport build_report(std::vector<UtteranceScore> rows, const SwerConfig &cfg);

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view name);

// Reals are rounded to six decimals. JSON keys keep a fixed order.
//
// CSV columns, one row per utterance followed by a row with id
// "__aggregate__" carrying micro WER, macro WIL and macro SWER:
//   id,bucket,entities,ref_len,hyp_len,hits,subs,dels,ins,wer,wip,wil,
//   score_a,accuracy,dw,wrong_important,swer,swer_ref_len,swer_hyp_len
void emit(const CorpusReport &report, ReportFormat format, std::ostream &out);

CorpusReport parse_report_json(std::istream &in);
// Rows only (the CSV carries no trace); aggregates are recomputed.
CorpusReport parse_report_csv(std::istream &in);
// Sniffs JSON vs CSV.
CorpusReport read_report(std::istream &in);

double round6(double x);

// ---------------------------------------------------------------------------
// Correlation

// Sample Pearson r. Throws DegenerateInput for mismatched lengths, fewer than
// two points or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson r over average ranks (ties share the mean rank).
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationRow {
  std::string metric;  // "wer" or "swer"
  double iw = 0.0;     // 0 for the WER baseline
  std::string bucket;  // Cat-I, Cat-II, Cat-III or all
  std::size_t n = 0;
  std::optional<double> pearson;   // empty when the bucket is degenerate
  std::optional<double> spearman;
};

// For the WER baseline and each importance weight, correlates the metric
// with HWER per bucket (Cat-I, Cat-II, Cat-III, all): four rows per metric
// setting. Throws MissingScore listing up to ten ids without an HWER value,
// and DegenerateInput when every row is degenerate.
std::vector<CorrelationRow> iw_sweep(std::span<const UtteranceScore> rows,
                                     const std::map<std::string, double> &hwer,
                                     std::span<const double> iw_values,
                                     bool clamp_output = true);

// Human scores: either `stimulus_id,rating` rows (averaged into HWER) or
// precomputed `id,hwer` rows, chosen by the header.
std::map<std::string, double> read_human_scores(std::istream &in);

void emit_sweep(std::span<const CorrelationRow> rows, ReportFormat format, std::ostream &out);

}  // namespace swerkit

#endif  // SWERKIT_REPORT_HPP

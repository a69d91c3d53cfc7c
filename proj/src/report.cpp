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

#include "swerkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "swerkit/error.hpp"
#include "swerkit/metrics.hpp"

namespace swerkit {

using json = nlohmann::ordered_json;

UtteranceScore score_pair(const ScoringPair &pair, const SwerConfig &cfg,
                          const SimilarityOracle &sim) {
  const auto &ref = pair.reference;
  const auto a = align_words(ref.tokens, pair.hypothesis);
  UtteranceScore s;
  s.id = pair.id;
  s.entities = ref.entity_count();
  s.bucket = bucket_for(s.entities);
  s.ref_len = a.ref_len;
  s.hyp_len = a.hyp_len;
  s.hits = a.hits;
  s.subs = a.subs;
  s.dels = a.dels;
  s.ins = a.ins;
  s.wer = wer(a);
  const auto wi = wip_wil(a);
  s.wip = wi.wip;
  s.wil = wi.wil;
  s.swer = score_utterance(ref, pair.hypothesis, cfg, sim);
  return s;
}

std::vector<UtteranceScore> score_pairs(std::span<const ScoringPair> pairs,
                                        const SwerConfig &cfg,
                                        const SimilarityOracle &sim,
                                        std::size_t jobs) {
  cfg.validate();
  std::vector<UtteranceScore> rows(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        rows[i] = score_pair(pairs[i], cfg, sim);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, pairs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const UtteranceScore &a, const UtteranceScore &b) { return a.id < b.id; });
  return rows;
}

Aggregates aggregate(std::span<const UtteranceScore> rows) {
  Aggregates agg;
  agg.utterances = rows.size();
  std::map<Bucket, BucketStat> buckets;
  double sum_wer = 0.0;
  double sum_wil = 0.0;
  double sum_swer = 0.0;
  for (const auto &r : rows) {
    agg.total_ref_words += r.ref_len;
    agg.total_errors += r.subs + r.dels + r.ins;
    sum_wer += r.wer;
    sum_wil += r.wil;
    sum_swer += r.swer.swer;
    auto &b = buckets[r.bucket];
    b.bucket = r.bucket;
    ++b.count;
    b.mean_wer += r.wer;
    b.mean_swer += r.swer.swer;
  }
  if (!rows.empty()) {
    const double n = static_cast<double>(rows.size());
    agg.macro_wer = sum_wer / n;
    agg.macro_wil = sum_wil / n;
    agg.macro_swer = sum_swer / n;
  }
  if (agg.total_ref_words > 0) {
    agg.micro_wer =
        static_cast<double>(agg.total_errors) / static_cast<double>(agg.total_ref_words);
  }
  for (auto &[bucket, stat] : buckets) {
    stat.mean_wer /= static_cast<double>(stat.count);
    stat.mean_swer /= static_cast<double>(stat.count);
    agg.buckets.push_back(stat);
  }
  return agg;
}

CorpusReport build_report(std::vector<UtteranceScore> rows, const SwerConfig &cfg) {
  CorpusReport report;
  report.config = cfg;
  report.rows = std::move(rows);
  report.aggregates = aggregate(report.rows);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::InvalidConfig, "format must be 'json' or 'csv', got '" + std::string(name) + "'");
}

double round6(double x) {
  if (!std::isfinite(x)) return x;
  double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

namespace {

std::string fixed6(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(6) << round6(x);
  return os.str();
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string &line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

json config_json(const SwerConfig &cfg) {
  json j;
  j["iw"] = round6(cfg.iw);
  j["sim_threshold"] = round6(cfg.sim_threshold);
  j["char_sub_threshold"] = cfg.char_sub_threshold;
  j["clamp_output"] = cfg.clamp_output;
  j["oov_policy"] = std::string(to_string(cfg.oov_policy));
  return j;
}

json breakdown_json(const SwerBreakdown &b) {
  json j;
  j["score_a"] = round6(b.score_a);
  j["accuracy"] = round6(b.accuracy);
  j["dw"] = round6(b.dw);
  j["wrong_important"] = b.wrong_important;
  j["swer"] = round6(b.swer);
  j["swer_unclamped"] = round6(b.swer_unclamped);
  j["ref_len"] = b.ref_len;
  j["hyp_len"] = b.hyp_len;
  json trace = json::array();
  for (const auto &t : b.trace) {
    json e;
    e["op"] = std::string(to_string(t.op.kind));
    e["ref_index"] = t.op.ref_index ? json(*t.op.ref_index) : json(nullptr);
    e["hyp_index"] = t.op.hyp_index ? json(*t.op.hyp_index) : json(nullptr);
    e["ref"] = t.ref_word;
    e["hyp"] = t.hyp_word;
    e["weight"] = round6(t.weight);
    e["contribution"] = round6(t.contribution);
    e["reason"] = std::string(to_string(t.reason));
    trace.push_back(std::move(e));
  }
  j["trace"] = std::move(trace);
  return j;
}

EditKind parse_edit_kind(const std::string &s) {
  for (auto k : {EditKind::Match, EditKind::Substitute, EditKind::Delete, EditKind::Insert}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::MalformedLine, "unknown edit op '" + s + "'");
}

SwerBreakdown breakdown_from_json(const json &j) {
  SwerBreakdown b;
  b.score_a = j.at("score_a").get<double>();
  b.accuracy = j.at("accuracy").get<double>();
  b.dw = j.at("dw").get<double>();
  b.wrong_important = j.at("wrong_important").get<std::size_t>();
  b.swer = j.at("swer").get<double>();
  b.swer_unclamped = j.value("swer_unclamped", b.swer);
  b.ref_len = j.value("ref_len", std::size_t{0});
  b.hyp_len = j.value("hyp_len", std::size_t{0});
  if (j.contains("trace")) {
    for (const auto &e : j["trace"]) {
      TraceEntry t;
      t.op.kind = parse_edit_kind(e.at("op").get<std::string>());
      if (!e.at("ref_index").is_null()) t.op.ref_index = e["ref_index"].get<std::size_t>();
      if (!e.at("hyp_index").is_null()) t.op.hyp_index = e["hyp_index"].get<std::size_t>();
      t.ref_word = e.at("ref").get<std::string>();
      t.hyp_word = e.at("hyp").get<std::string>();
      t.weight = e.at("weight").get<double>();
      t.contribution = e.at("contribution").get<double>();
      t.reason = parse_reason(e.at("reason").get<std::string>());
      b.trace.push_back(std::move(t));
    }
  }
  return b;
}

void emit_json(const CorpusReport &report, std::ostream &out) {
  json j;
  j["report_version"] = report.report_version;
  j["config"] = config_json(report.config);
  const auto &a = report.aggregates;
  json agg;
  agg["utterances"] = a.utterances;
  agg["total_ref_words"] = a.total_ref_words;
  agg["total_errors"] = a.total_errors;
  agg["micro_wer"] = round6(a.micro_wer);
  agg["macro_wer"] = round6(a.macro_wer);
  agg["macro_wil"] = round6(a.macro_wil);
  agg["macro_swer"] = round6(a.macro_swer);
  json buckets = json::array();
  for (const auto &b : a.buckets) {
    json e;
    e["bucket"] = std::string(to_string(b.bucket));
    e["count"] = b.count;
    e["mean_wer"] = round6(b.mean_wer);
    e["mean_swer"] = round6(b.mean_swer);
    buckets.push_back(std::move(e));
  }
  agg["buckets"] = std::move(buckets);
  j["aggregates"] = std::move(agg);
  json rows = json::array();
  for (const auto &r : report.rows) {
    json e;
    e["id"] = r.id;
    e["bucket"] = std::string(to_string(r.bucket));
    e["entities"] = r.entities;
    e["ref_len"] = r.ref_len;
    e["hyp_len"] = r.hyp_len;
    e["hits"] = r.hits;
    e["subs"] = r.subs;
    e["dels"] = r.dels;
    e["ins"] = r.ins;
    e["wer"] = round6(r.wer);
    e["wip"] = round6(r.wip);
    e["wil"] = round6(r.wil);
    e["swer"] = breakdown_json(r.swer);
    rows.push_back(std::move(e));
  }
  j["utterances"] = std::move(rows);
  out << j.dump(2) << '\n';
}

constexpr const char *kCsvHeader =
    "id,bucket,entities,ref_len,hyp_len,hits,subs,dels,ins,wer,wip,wil,"
    "score_a,accuracy,dw,wrong_important,swer,swer_ref_len,swer_hyp_len";

void emit_csv(const CorpusReport &report, std::ostream &out) {
  out << kCsvHeader << '\n';
  for (const auto &r : report.rows) {
    const auto &b = r.swer;
    out << csv_field(r.id) << ',' << to_string(r.bucket) << ',' << r.entities << ','
        << r.ref_len << ',' << r.hyp_len << ',' << r.hits << ',' << r.subs << ','
        << r.dels << ',' << r.ins << ',' << fixed6(r.wer) << ',' << fixed6(r.wip) << ','
        << fixed6(r.wil) << ',' << fixed6(b.score_a) << ',' << fixed6(b.accuracy) << ','
        << fixed6(b.dw) << ',' << b.wrong_important << ',' << fixed6(b.swer) << ','
        << b.ref_len << ',' << b.hyp_len << '\n';
  }
  const auto &a = report.aggregates;
  out << "__aggregate__,all,," << a.total_ref_words << ",,,,,," << fixed6(a.micro_wer)
      << ",," << fixed6(a.macro_wil) << ",,,,," << fixed6(a.macro_swer) << ",,\n";
}

}  // namespace

void emit(const CorpusReport &report, ReportFormat format, std::ostream &out) {
  if (format == ReportFormat::Json) {
    emit_json(report, out);
  } else {
    emit_csv(report, out);
  }
}

CorpusReport parse_report_json(std::istream &in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedLine, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    CorpusReport r;
    r.report_version = j.at("report_version").get<int>();
    if (r.report_version != 1) {
      throw Error(ErrorCode::MalformedLine,
                  "unsupported report_version " + std::to_string(r.report_version));
    }
    const auto &c = j.at("config");
    r.config.iw = c.at("iw").get<double>();
    r.config.sim_threshold = c.at("sim_threshold").get<double>();
    r.config.char_sub_threshold = c.at("char_sub_threshold").get<std::size_t>();
    r.config.clamp_output = c.at("clamp_output").get<bool>();
    r.config.oov_policy = parse_oov_policy(c.at("oov_policy").get<std::string>());
    for (const auto &e : j.at("utterances")) {
      UtteranceScore s;
      s.id = e.at("id").get<std::string>();
      s.bucket = parse_bucket(e.at("bucket").get<std::string>());
      s.entities = e.at("entities").get<std::size_t>();
      s.ref_len = e.at("ref_len").get<std::size_t>();
      s.hyp_len = e.at("hyp_len").get<std::size_t>();
      s.hits = e.at("hits").get<std::size_t>();
      s.subs = e.at("subs").get<std::size_t>();
      s.dels = e.at("dels").get<std::size_t>();
      s.ins = e.at("ins").get<std::size_t>();
      s.wer = e.at("wer").get<double>();
      s.wip = e.at("wip").get<double>();
      s.wil = e.at("wil").get<double>();
      s.swer = breakdown_from_json(e.at("swer"));
      r.rows.push_back(std::move(s));
    }
    r.aggregates = aggregate(r.rows);
    return r;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedLine, std::string("report JSON: ") + e.what());
  }
}

CorpusReport parse_report_csv(std::istream &in) {
  CorpusReport r;
  std::string line;
  if (!std::getline(in, line) || line.rfind(kCsvHeader, 0) != 0) {
    throw Error(ErrorCode::MalformedLine, "report CSV header does not match");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto f = csv_split(line);
    if (f.size() != 19) {
      throw Error(ErrorCode::MalformedLine,
                  "report CSV line " + std::to_string(line_no) + ": expected 19 columns");
    }
    if (f[0] == "__aggregate__") continue;
    try {
      UtteranceScore s;
      s.id = f[0];
      s.bucket = parse_bucket(f[1]);
      s.entities = std::stoul(f[2]);
      s.ref_len = std::stoul(f[3]);
      s.hyp_len = std::stoul(f[4]);
      s.hits = std::stoul(f[5]);
      s.subs = std::stoul(f[6]);
      s.dels = std::stoul(f[7]);
      s.ins = std::stoul(f[8]);
      s.wer = std::stod(f[9]);
      s.wip = std::stod(f[10]);
      s.wil = std::stod(f[11]);
      s.swer.score_a = std::stod(f[12]);
      s.swer.accuracy = std::stod(f[13]);
      s.swer.dw = std::stod(f[14]);
      s.swer.wrong_important = std::stoul(f[15]);
      s.swer.swer = std::stod(f[16]);
      s.swer.swer_unclamped = s.swer.swer;
      s.swer.ref_len = std::stoul(f[17]);
      s.swer.hyp_len = std::stoul(f[18]);
      r.rows.push_back(std::move(s));
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::MalformedLine,
                  "report CSV line " + std::to_string(line_no) + ": bad number");
    }
  }
  r.aggregates = aggregate(r.rows);
  return r;
}

CorpusReport read_report(std::istream &in) {
  std::ws(in);
  if (in.peek() == '{') return parse_report_json(in);
  return parse_report_csv(in);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DegenerateInput, "pearson: vectors differ in length");
  }
  if (x.size() < 2) throw Error(ErrorCode::DegenerateInput, "pearson: need at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::DegenerateInput, "pearson: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DegenerateInput, "spearman: vectors differ in length");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

std::vector<CorrelationRow> iw_sweep(std::span<const UtteranceScore> rows,
                                     const std::map<std::string, double> &hwer,
                                     std::span<const double> iw_values,
                                     bool clamp_output) {
  std::vector<std::string> missing;
  for (const auto &r : rows) {
    if (hwer.count(r.id) == 0) missing.push_back(r.id);
  }
  if (!missing.empty()) {
    std::string detail = std::to_string(missing.size()) + " scored ids lack a human score:";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) detail += " " + missing[i];
    throw Error(ErrorCode::MissingScore, detail);
  }

  const std::vector<std::pair<std::string, std::optional<Bucket>>> groups = {
      {"Cat-I", Bucket::CatI}, {"Cat-II", Bucket::CatII}, {"Cat-III", Bucket::CatIII}, {"all", std::nullopt}};

  std::vector<CorrelationRow> out;
  auto add_rows = [&](const std::string &metric, double iw, auto metric_of) {
    for (const auto &[label, bucket] : groups) {
      std::vector<double> xs;
      std::vector<double> ys;
      for (const auto &r : rows) {
        if (bucket && r.bucket != *bucket) continue;
        xs.push_back(metric_of(r));
        ys.push_back(hwer.at(r.id));
      }
      CorrelationRow row;
      row.metric = metric;
      row.iw = iw;
      row.bucket = label;
      row.n = xs.size();
      try {
        row.pearson = pearson(xs, ys);
        row.spearman = spearman(xs, ys);
      } catch (const Error &) {
        row.pearson.reset();
        row.spearman.reset();
      }
      out.push_back(std::move(row));
    }
  };
  add_rows("wer", 0.0, [](const UtteranceScore &r) { return r.wer; });
  for (double iw : iw_values) {
    if (!(iw >= 1.0)) throw Error(ErrorCode::InvalidConfig, "iw must be >= 1 in a sweep");
    add_rows("swer", iw, [iw, clamp_output](const UtteranceScore &r) {
      return swer_at_iw(r.swer, iw, clamp_output);
    });
  }
  if (std::none_of(out.begin(), out.end(), [](const CorrelationRow &r) { return r.pearson.has_value(); })) {
    throw Error(ErrorCode::DegenerateInput, "no bucket has two or more points with non-zero variance");
  }
  return out;
}

std::map<std::string, double> read_human_scores(std::istream &in) {
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  auto cols = csv_split(header);
  for (auto &c : cols) {
    c.erase(0, c.find_first_not_of(" \t"));
    c.erase(c.find_last_not_of(" \t") + 1);
  }
  std::map<std::string, double> out;
  if (cols.size() == 2 && cols[0] == "stimulus_id" && cols[1] == "rating") {
    std::stringstream rest;
    rest << header << '\n' << in.rdbuf();
    for (const auto &rec : read_ratings_csv(rest)) out[rec.stimulus_id] = hwer_from_ratings(rec);
    return out;
  }
  if (cols.size() != 2 || cols[0] != "id" || cols[1] != "hwer") {
    throw Error(ErrorCode::MalformedLine, "human score header must be 'stimulus_id,rating' or 'id,hwer'");
  }
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = csv_split(line);
    double v = 0.0;
    try {
      if (f.size() != 2) throw std::invalid_argument("columns");
      v = std::stod(f[1]);
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::MalformedLine, "human score line " + std::to_string(line_no) + ": expected 'id,hwer'");
    }
    if (!out.emplace(f[0], v).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate human score id '" + f[0] + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::EmptyRatings, "human score file has no rows");
  return out;
}

void emit_sweep(std::span<const CorrelationRow> rows, ReportFormat format, std::ostream &out) {
  if (format == ReportFormat::Json) {
    json j;
    j["report_version"] = 1;
    json arr = json::array();
    for (const auto &r : rows) {
      json e;
      e["metric"] = r.metric;
      e["iw"] = round6(r.iw);
      e["bucket"] = r.bucket;
      e["n"] = r.n;
      e["pearson"] = r.pearson ? json(round6(*r.pearson)) : json(nullptr);
      e["spearman"] = r.spearman ? json(round6(*r.spearman)) : json(nullptr);
      arr.push_back(std::move(e));
    }
    j["correlations"] = std::move(arr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "metric,iw,bucket,n,pearson,spearman\n";
  for (const auto &r : rows) {
    out << r.metric << ',' << fixed6(r.iw) << ',' << r.bucket << ',' << r.n << ','
        << (r.pearson ? fixed6(*r.pearson) : "") << ',' << (r.spearman ? fixed6(*r.spearman) : "")
        << '\n';
  }
}

}  // namespace swerkit

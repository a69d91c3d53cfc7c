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

#include "swerkit/cli.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swerkit/corpus.hpp"
#include "swerkit/embeddings.hpp"
#include "swerkit/error.hpp"
#include "swerkit/injector.hpp"
#include "swerkit/report.hpp"
#include "swerkit/swer.hpp"

namespace swerkit::cli {

namespace {

std::string env_name(const std::string &flag) {
  std::string out = "SWERKIT_";
  for (char c : flag) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Registers --name with an env override and returns the option.
template <typename T>
CLI::Option *flag(CLI::App *app, const std::string &name, T &target, const std::string &help) {
  return app->add_option("--" + name, target, help)->envname(env_name(name));
}

std::ifstream open_in(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return in;
}

void write_out(const std::string &path, const std::string &content, std::ostream &fallback) {
  if (path.empty() || path == "-") {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  f << content;
}

struct ScoreArgs {
  std::string ref, hyp, annotations, embeddings, oov = "dissimilar", format = "json", out;
  double iw = 1.0;
  double sim_threshold = 0.6;
  std::size_t char_threshold = 0;
  bool no_clamp = false;
  std::size_t jobs = 1;
};

int cmd_score(const ScoreArgs &a, std::ostream &out, std::ostream &err) {
  SwerConfig cfg;
  cfg.iw = a.iw;
  cfg.sim_threshold = a.sim_threshold;
  cfg.char_sub_threshold = a.char_threshold;
  cfg.clamp_output = !a.no_clamp;
  cfg.oov_policy = parse_oov_policy(a.oov);
  cfg.validate();
  const auto format = parse_report_format(a.format);

  EmbeddingLexicon lex;
  if (!a.embeddings.empty()) {
    lex = load_text_vectors_file(a.embeddings);
    const auto &s = lex.load_summary();
    if (s.malformed > 0 || s.duplicates > 0) {
      err << "warning: embeddings: " << s.malformed << " malformed lines skipped, "
          << s.duplicates << " duplicate words ignored\n";
    }
  }
  LexiconSimilarity sim(lex, cfg.oov_policy);

  auto ref_in = open_in(a.ref);
  auto hyp_in = open_in(a.hyp);
  std::ifstream ann_in;
  if (!a.annotations.empty()) ann_in = open_in(a.annotations);
  auto pairs = parse_pairs(ref_in, hyp_in, a.annotations.empty() ? nullptr : &ann_in);
  for (const auto &w : pairs.warnings) err << "warning: " << w << '\n';

  auto report = build_report(score_pairs(pairs.pairs, cfg, sim, a.jobs), cfg);
  std::ostringstream buf;
  emit(report, format, buf);
  write_out(a.out, buf.str(), out);
  return kExitOk;
}

struct InjectArgs {
  std::string ref, annotations, mode = "per-entity", homophones, out_hyp, out_provenance,
      out_ref, out_annotations, hyp_format = "trn";
  std::uint64_t seed = 0;
  std::size_t edits = 2;
  double p_sub = 0.1, p_del = 0.05, p_ins = 0.05;
  std::size_t jobs = 1;
};

int cmd_inject(const InjectArgs &a, std::ostream &out, std::ostream &err) {
  CorruptionSpec spec;
  spec.seed = a.seed;
  spec.mode = parse_injection_mode(a.mode);
  spec.substitution.edits = a.edits;
  spec.rates = {a.p_sub, a.p_del, a.p_ins};
  if (!a.homophones.empty()) {
    auto in = open_in(a.homophones);
    spec.substitution.kind = SubstitutionStrategy::Kind::Homophone;
    spec.substitution.homophones = read_homophones(in);
  }
  spec.validate();
  TranscriptFormat hyp_format;
  if (a.hyp_format == "trn") {
    hyp_format = TranscriptFormat::Trn;
  } else if (a.hyp_format == "jsonl") {
    hyp_format = TranscriptFormat::JsonLines;
  } else {
    throw Error(ErrorCode::InvalidConfig, "hyp-format must be 'trn' or 'jsonl'");
  }

  auto ref_in = open_in(a.ref);
  std::ifstream ann_in;
  if (!a.annotations.empty()) ann_in = open_in(a.annotations);
  const auto refs = read_references(ref_in, a.annotations.empty() ? nullptr : &ann_in);
  const auto result = inject_corpus(refs, spec, a.jobs);
  for (const auto &w : result.warnings) err << "warning: NoEntities: " << w << '\n';
  if (!result.warnings.empty()) {
    err << "warning: " << result.warnings.size() << " of " << refs.size()
        << " references had no entities\n";
  }

  std::map<std::string, const AnnotatedUtterance *> by_id;
  for (const auto &r : refs) by_id.emplace(r.id, &r);
  std::vector<TranscriptRecord> hyps;
  std::vector<TranscriptRecord> var_refs;
  std::vector<AnnotationRecord> var_anns;
  for (const auto &v : result.variants) {
    hyps.push_back({v.variant_id, join_tokens(v.tokens)});
    const auto &src = *by_id.at(v.source_id);
    var_refs.push_back({v.variant_id, src.raw_text});
    auto ann = annotation_of(src);
    ann.id = v.variant_id;
    var_anns.push_back(std::move(ann));
  }
  std::ostringstream hyp_buf;
  write_transcripts(hyp_buf, hyps, hyp_format);
  write_out(a.out_hyp, hyp_buf.str(), out);
  if (!a.out_provenance.empty()) {
    std::ostringstream buf;
    write_provenance(buf, result.variants);
    write_out(a.out_provenance, buf.str(), out);
  }
  if (!a.out_ref.empty()) {
    std::ostringstream buf;
    write_transcripts(buf, var_refs, hyp_format);
    write_out(a.out_ref, buf.str(), out);
  }
  if (!a.out_annotations.empty()) {
    std::ostringstream buf;
    write_annotations(buf, var_anns);
    write_out(a.out_annotations, buf.str(), out);
  }
  return kExitOk;
}

struct CorrelateArgs {
  std::string scores, human, format = "json", out;
  std::vector<double> iw_sweep{1.0, 2.0, 3.0};
  bool no_clamp = false;
};

int cmd_correlate(const CorrelateArgs &a, std::ostream &out, std::ostream &) {
  const auto format = parse_report_format(a.format);
  auto scores_in = open_in(a.scores);
  const auto report = read_report(scores_in);
  auto human_in = open_in(a.human);
  const auto hwer = read_human_scores(human_in);
  const auto rows = iw_sweep(report.rows, hwer, a.iw_sweep, !a.no_clamp);
  std::ostringstream buf;
  emit_sweep(rows, format, buf);
  write_out(a.out, buf.str(), out);
  return kExitOk;
}

struct ConllArgs {
  std::string in, out_ref, out_annotations, id_prefix = "conll-";
};

int cmd_conll(const ConllArgs &a, std::ostream &out, std::ostream &err) {
  auto in = open_in(a.in);
  const auto parsed = parse_conll(in);
  for (const auto &issue : parsed.issues) {
    err << "warning: MalformedLine: line " << issue.line_no << ": " << issue.message << '\n';
  }
  std::vector<TranscriptRecord> refs;
  std::vector<AnnotationRecord> anns;
  std::size_t n = 0;
  for (const auto &s : parsed.sentences) {
    ++n;
    std::ostringstream id;
    id << a.id_prefix << std::setw(6) << std::setfill('0') << n;
    try {
      auto u = to_annotated(s, id.str());
      refs.push_back({u.id, u.raw_text});
      anns.push_back(annotation_of(u));
    } catch (const Error &e) {
      err << "warning: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
  }
  if (refs.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences parsed from '" + a.in + "'");
  std::ostringstream ref_buf;
  write_transcripts(ref_buf, refs, TranscriptFormat::Trn);
  write_out(a.out_ref, ref_buf.str(), out);
  if (!a.out_annotations.empty()) {
    std::ostringstream buf;
    write_annotations(buf, anns);
    write_out(a.out_annotations, buf.str(), out);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Semantic-WER scoring toolkit"};
  app.name("swerkit");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value / TOML config file; flags win over it, it wins over SWERKIT_* env vars");
  app.allow_config_extras(CLI::config_extras_mode::error);

  ScoreArgs score;
  auto *sc = app.add_subcommand("score", "score hypotheses against annotated references");
  flag(sc, "ref", score.ref, "reference transcripts (trn or JSON lines)")->required();
  flag(sc, "hyp", score.hyp, "hypothesis transcripts (trn or JSON lines)")->required();
  flag(sc, "annotations", score.annotations, "annotation sidecar (JSON lines)");
  flag(sc, "embeddings", score.embeddings, "word vectors in text format");
  flag(sc, "iw", score.iw, "importance weight, >= 1");
  flag(sc, "sim-threshold", score.sim_threshold, "similarity at or above which a plain substitution is free");
  flag(sc, "char-threshold", score.char_threshold, "character substitutions forgiven in spelled entities");
  flag(sc, "oov", score.oov, "dissimilar | char-fallback");
  flag(sc, "format", score.format, "json | csv");
  flag(sc, "out", score.out, "output path (stdout when absent)");
  flag(sc, "jobs", score.jobs, "worker threads");
  sc->add_flag("--no-clamp", score.no_clamp, "report SWER without clamping to [0, 1]")
      ->envname("SWERKIT_NO_CLAMP");

  InjectArgs inject;
  auto *ic = app.add_subcommand("inject", "generate corrupted hypotheses from annotated references");
  flag(ic, "ref", inject.ref, "reference transcripts")->required();
  flag(ic, "annotations", inject.annotations, "annotation sidecar");
  flag(ic, "seed", inject.seed, "random seed");
  flag(ic, "mode", inject.mode, "per-entity | random-mix");
  flag(ic, "edits", inject.edits, "character edits per substituted word");
  flag(ic, "homophones", inject.homophones, "`word replacement` list used before perturbation");
  flag(ic, "p-sub", inject.p_sub, "random-mix substitution rate");
  flag(ic, "p-del", inject.p_del, "random-mix deletion rate");
  flag(ic, "p-ins", inject.p_ins, "random-mix insertion rate");
  flag(ic, "hyp-format", inject.hyp_format, "trn | jsonl");
  flag(ic, "out-hyp", inject.out_hyp, "variant hypotheses (stdout when absent)");
  flag(ic, "out-provenance", inject.out_provenance, "provenance JSON lines");
  flag(ic, "out-ref", inject.out_ref, "references re-keyed by variant id");
  flag(ic, "out-annotations", inject.out_annotations, "annotations re-keyed by variant id");
  flag(ic, "jobs", inject.jobs, "worker threads");

  CorrelateArgs corr;
  auto *cc = app.add_subcommand("correlate", "correlate WER/SWER with human scores");
  flag(cc, "scores", corr.scores, "report written by `score` (JSON or CSV)")->required();
  flag(cc, "human", corr.human, "`stimulus_id,rating` or `id,hwer` CSV")->required();
  flag(cc, "iw-sweep", corr.iw_sweep, "importance weights to evaluate")->delimiter(',');
  flag(cc, "format", corr.format, "json | csv");
  flag(cc, "out", corr.out, "output path (stdout when absent)");
  cc->add_flag("--no-clamp", corr.no_clamp, "correlate unclamped SWER")->envname("SWERKIT_NO_CLAMP");

  ConllArgs conll;
  auto *kc = app.add_subcommand("conll", "convert CoNLL-2003 to references + annotations");
  flag(kc, "in", conll.in, "CoNLL-2003 column file")->required();
  flag(kc, "out-ref", conll.out_ref, "reference trn output (stdout when absent)");
  flag(kc, "out-annotations", conll.out_annotations, "annotation sidecar output");
  flag(kc, "id-prefix", conll.id_prefix, "prefix for generated utterance ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (sc->parsed()) return cmd_score(score, out, err);
    if (ic->parsed()) return cmd_inject(inject, out, err);
    if (cc->parsed()) return cmd_correlate(corr, out, err);
    if (kc->parsed()) return cmd_conll(conll, out, err);
  } catch (const Error &e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace swerkit::cli

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

// Python bindings: swerkit._core.

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swerkit/align.hpp"
#include "swerkit/corpus.hpp"
#include "swerkit/embeddings.hpp"
#include "swerkit/error.hpp"
#include "swerkit/injector.hpp"
#include "swerkit/metrics.hpp"
#include "swerkit/report.hpp"
#include "swerkit/swer.hpp"

namespace py = pybind11;
using namespace swerkit;

namespace {

using SpanTuple = std::tuple<std::size_t, std::size_t, std::string>;
using SimTable = std::map<std::pair<std::string, std::string>, double>;

std::vector<Token> words_of(const std::vector<std::string> &words) {
  std::vector<std::string> norm;
  for (const auto &w : words) {
    auto n = normalize_word(w);
    if (!n.empty()) norm.push_back(std::move(n));
  }
  return make_tokens(norm);
}

py::object optional_index(const std::optional<std::size_t> &i) {
  return i ? py::object(py::int_(*i)) : py::object(py::none());
}

py::dict alignment_dict(const AlignmentResult &a) {
  py::list ops;
  for (const auto &op : a.ops) {
    ops.append(py::make_tuple(std::string(to_string(op.kind)), optional_index(op.ref_index),
                              optional_index(op.hyp_index)));
  }
  py::dict d;
  d["ops"] = ops;
  d["hits"] = a.hits;
  d["subs"] = a.subs;
  d["dels"] = a.dels;
  d["ins"] = a.ins;
  d["ref_len"] = a.ref_len;
  d["hyp_len"] = a.hyp_len;
  return d;
}

py::dict breakdown_dict(const SwerBreakdown &b) {
  py::list trace;
  for (const auto &t : b.trace) {
    py::dict e;
    e["op"] = std::string(to_string(t.op.kind));
    e["ref_index"] = optional_index(t.op.ref_index);
    e["hyp_index"] = optional_index(t.op.hyp_index);
    e["ref_word"] = t.ref_word;
    e["hyp_word"] = t.hyp_word;
    e["weight"] = t.weight;
    e["contribution"] = t.contribution;
    e["reason"] = std::string(to_string(t.reason));
    trace.append(e);
  }
  py::dict d;
  d["score_a"] = b.score_a;
  d["accuracy"] = b.accuracy;
  d["dw"] = b.dw;
  d["wrong_important"] = b.wrong_important;
  d["swer"] = b.swer;
  d["swer_unclamped"] = b.swer_unclamped;
  d["ref_len"] = b.ref_len;
  d["hyp_len"] = b.hyp_len;
  d["trace"] = trace;
  return d;
}

SwerConfig make_config(double iw, double sim_threshold, std::size_t char_threshold, bool clamp,
                       const std::string &oov) {
  SwerConfig cfg;
  cfg.iw = iw;
  cfg.sim_threshold = sim_threshold;
  cfg.char_sub_threshold = char_threshold;
  cfg.clamp_output = clamp;
  cfg.oov_policy = parse_oov_policy(oov);
  cfg.validate();
  return cfg;
}

// Holds whichever similarity source the caller asked for.
struct SimilaritySource {
  EmbeddingLexicon empty;
  std::unique_ptr<SimilarityOracle> oracle;

  SimilaritySource(const EmbeddingLexicon *lex, const std::optional<SimTable> &table, OovPolicy policy) {
    if (table) {
      auto t = std::make_unique<TableSimilarity>(0.0);
      for (const auto &[pair, value] : *table) t->set(pair.first, pair.second, value);
      oracle = std::move(t);
    } else {
      oracle = std::make_unique<LexiconSimilarity>(lex ? *lex : empty, policy);
    }
  }
};

std::vector<SpelledSpan> spans_of(const std::vector<SpanTuple> &spelled) {
  std::vector<SpelledSpan> out;
  for (const auto &[start, end, canon] : spelled) out.push_back({start, end, canon});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semantic-WER scoring toolkit";

  static py::exception<Error> swerkit_error(m, "SwerkitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      std::string message = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(swerkit_error.ptr(), message.c_str());
    }
  });

  m.def(
      "tokenize",
      [](const std::string &text) {
        std::vector<std::string> out;
        for (auto &t : tokenize(text)) out.push_back(t.text);
        return out;
      },
      py::arg("text"), "Normalized word tokens of a transcript.");

  m.def(
      "align", [](const std::string &ref, const std::string &hyp) { return alignment_dict(align_words(tokenize(ref), tokenize(hyp))); },
      py::arg("ref"), py::arg("hyp"), "Word alignment of two transcripts.");

  m.def(
      "align_words",
      [](const std::vector<std::string> &ref, const std::vector<std::string> &hyp) {
        return alignment_dict(align_words(std::span<const std::string>(ref), std::span<const std::string>(hyp)));
      },
      py::arg("ref"), py::arg("hyp"), "Alignment of two already tokenized word lists.");

  m.def(
      "wer", [](const std::string &ref, const std::string &hyp) { return wer(align_words(tokenize(ref), tokenize(hyp))); },
      py::arg("ref"), py::arg("hyp"));

  m.def("cer", &cer, py::arg("ref_word"), py::arg("hyp_word"), py::arg("char_threshold") = 0);

  m.def(
      "wip_wil",
      [](const std::string &ref, const std::string &hyp) {
        auto w = wip_wil(align_words(tokenize(ref), tokenize(hyp)));
        return py::make_tuple(w.wip, w.wil);
      },
      py::arg("ref"), py::arg("hyp"), "(WIP, WIL) of a transcript pair.");

  m.def(
      "hwer",
      [](const std::vector<int> &ratings) {
        RatingRecord r;
        r.ratings = ratings;
        return hwer_from_ratings(r);
      },
      py::arg("ratings"), "1 - mean(ratings) / 5 for ratings on a 1..5 scale.");

  py::class_<EmbeddingLexicon>(m, "Lexicon")
      .def_static("load", &load_text_vectors_file, py::arg("path"), "Reads word vectors in text format.")
      .def_static(
          "from_text",
          [](const std::string &text) {
            std::istringstream in(text);
            return load_text_vectors(in);
          },
          py::arg("text"))
      .def_property_readonly("dim", &EmbeddingLexicon::dim)
      .def("__len__", &EmbeddingLexicon::size)
      .def("__contains__", [](const EmbeddingLexicon &l, const std::string &w) { return l.find(w) != nullptr; })
      .def(
          "vector",
          [](const EmbeddingLexicon &l, const std::string &w) -> std::optional<std::vector<float>> {
            if (auto *v = l.find(w)) return *v;
            return std::nullopt;
          },
          py::arg("word"))
      .def(
          "similarity",
          [](const EmbeddingLexicon &l, const std::string &a, const std::string &b, const std::string &oov) {
            return similarity(a, b, l, parse_oov_policy(oov));
          },
          py::arg("ref_word"), py::arg("hyp_word"), py::arg("oov") = "dissimilar");

  m.def(
      "cosine", [](const std::vector<float> &u, const std::vector<float> &v) { return cosine(u, v); }, py::arg("u"),
      py::arg("v"));

  m.def(
      "swer",
      [](const std::string &ref, const std::string &hyp, const std::vector<std::size_t> &ne,
         const std::vector<std::size_t> &sent, const std::vector<SpanTuple> &spelled, double iw, double sim_threshold,
         std::size_t char_threshold, bool clamp, const std::string &oov, const EmbeddingLexicon *lexicon,
         const std::optional<SimTable> &similarities) {
        auto cfg = make_config(iw, sim_threshold, char_threshold, clamp, oov);
        auto spans = spans_of(spelled);
        auto u = make_annotated("utt", ref, ne, sent, spans);
        SimilaritySource sim(lexicon, similarities, cfg.oov_policy);
        auto h = tokenize(hyp);
        return breakdown_dict(score_utterance(u, h, cfg, *sim.oracle));
      },
      py::arg("ref"), py::arg("hyp"), py::kw_only(), py::arg("ne") = std::vector<std::size_t>{},
      py::arg("sent") = std::vector<std::size_t>{}, py::arg("spelled") = std::vector<SpanTuple>{},
      py::arg("iw") = 1.0, py::arg("sim_threshold") = 0.6, py::arg("char_threshold") = 0, py::arg("clamp") = true,
      py::arg("oov") = "dissimilar", py::arg("lexicon") = nullptr, py::arg("similarities") = py::none(),
      "Semantic-WER of one pair. `ne`/`sent` index normalized reference tokens,\n"
      "`spelled` holds half-open (start, end, canonical) spans. Similarity comes\n"
      "from `similarities` ({(a, b): value}) when given, else from `lexicon`.");

  m.def(
      "score_files",
      [](const std::string &ref_path, const std::string &hyp_path, const std::optional<std::string> &ann_path,
         const std::optional<std::string> &embeddings, double iw, double sim_threshold, std::size_t char_threshold,
         bool clamp, const std::string &oov, const std::string &format, std::size_t jobs) {
        auto cfg = make_config(iw, sim_threshold, char_threshold, clamp, oov);
        auto open = [](const std::string &p) {
          std::ifstream in(p, std::ios::binary);
          if (!in) throw Error(ErrorCode::Io, "cannot open '" + p + "'");
          return in;
        };
        auto ref = open(ref_path);
        auto hyp = open(hyp_path);
        std::optional<std::ifstream> ann;
        if (ann_path) ann = open(*ann_path);
        std::optional<EmbeddingLexicon> lex;
        if (embeddings) lex = load_text_vectors_file(*embeddings);
        EmbeddingLexicon empty;
        LexiconSimilarity sim(lex ? *lex : empty, cfg.oov_policy);
        auto parsed = parse_pairs(ref, hyp, ann ? &*ann : nullptr);
        std::vector<UtteranceScore> rows;
        {
          py::gil_scoped_release release;
          rows = score_pairs(parsed.pairs, cfg, sim, jobs);
        }
        std::ostringstream out;
        emit(build_report(std::move(rows), cfg), parse_report_format(format), out);
        return out.str();
      },
      py::arg("ref"), py::arg("hyp"), py::arg("annotations") = py::none(), py::kw_only(),
      py::arg("embeddings") = py::none(), py::arg("iw") = 1.0, py::arg("sim_threshold") = 0.6,
      py::arg("char_threshold") = 0, py::arg("clamp") = true, py::arg("oov") = "dissimilar",
      py::arg("format") = "json", py::arg("jobs") = 1, "Corpus report, as `swerkit score` writes it.");

  m.def(
      "parse_conll",
      [](const std::string &text) {
        std::istringstream in(text);
        auto parsed = parse_conll(in);
        py::list out;
        for (const auto &s : parsed.sentences) {
          py::dict d;
          std::vector<std::string> surface;
          std::vector<std::string> tags;
          for (const auto &t : s.tokens) {
            surface.push_back(t.surface);
            tags.push_back(t.ne_tag);
          }
          d["tokens"] = surface;
          d["tags"] = tags;
          d["document"] = s.document;
          try {
            auto u = to_annotated(s, "s");
            std::vector<std::string> norm;
            for (const auto &t : u.tokens) norm.push_back(t.text);
            d["normalized"] = norm;
            d["ne"] = annotation_of(u).ne;
          } catch (const Error &) {
            d["normalized"] = std::vector<std::string>{};
            d["ne"] = std::vector<std::size_t>{};
          }
          out.append(d);
        }
        return out;
      },
      py::arg("text"), "Sentences of a CoNLL-2003 column file; malformed lines are skipped.");

  m.def(
      "entity_variants",
      [](const std::string &ref, const std::vector<std::size_t> &ne, std::uint64_t seed, const std::string &mode,
         std::size_t edits) {
        CorruptionSpec spec;
        spec.seed = seed;
        spec.mode = parse_injection_mode(mode);
        spec.substitution.edits = edits;
        spec.validate();
        auto u = make_annotated("utt", ref, ne);
        py::list out;
        for (const auto &v : generate_entity_variants(u, spec, 0)) {
          py::dict d;
          d["variant_id"] = v.variant_id;
          d["text"] = join_tokens(v.tokens);
          py::list ops;
          for (const auto &op : v.ops) ops.append(py::make_tuple(std::string(to_string(op.op)), op.token_index));
          d["ops"] = ops;
          out.append(d);
        }
        return out;
      },
      py::arg("ref"), py::arg("ne"), py::kw_only(), py::arg("seed") = 0, py::arg("mode") = "per-entity",
      py::arg("edits") = 2, "Corrupted hypotheses targeting the given entity tokens.");

  m.def(
      "pearson", [](const std::vector<double> &x, const std::vector<double> &y) { return pearson(x, y); },
      py::arg("x"), py::arg("y"));
  m.def(
      "spearman", [](const std::vector<double> &x, const std::vector<double> &y) { return spearman(x, y); },
      py::arg("x"), py::arg("y"));
}

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

#include "swerkit/corpus.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "swerkit/error.hpp"

namespace swerkit {

using json = nlohmann::ordered_json;

namespace {

bool valid_ne_tag(const std::string &tag) {
  if (tag == "O") return true;
  if (tag.size() < 3 || (tag[0] != 'I' && tag[0] != 'B') || tag[1] != '-') return false;
  return std::all_of(tag.begin() + 2, tag.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  });
}

std::string_view trim(std::string_view s) {
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ConllParseResult parse_conll(std::istream &in) {
  ConllParseResult out;
  ConllSentence current;
  auto flush = [&]() {
    if (!current.tokens.empty()) out.sentences.push_back(std::move(current));
    current = ConllSentence{};
    current.document = out.documents;
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_whitespace(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields[0] == "-DOCSTART-") {
      flush();
      ++out.documents;
      current.document = out.documents;
      continue;
    }
    if (fields.size() < 2) {
      out.issues.push_back({line_no, "expected at least two columns"});
      continue;
    }
    if (!valid_ne_tag(fields.back())) {
      out.issues.push_back({line_no, "unrecognized NE tag '" + fields.back() + "'"});
      continue;
    }
    current.tokens.push_back({fields.front(), fields.back()});
  }
  flush();
  return out;
}

AnnotatedUtterance to_annotated(const ConllSentence &s, std::string id) {
  AnnotatedUtterance u;
  u.id = std::move(id);
  for (const auto &t : s.tokens) {
    if (!u.raw_text.empty()) u.raw_text.push_back(' ');
    u.raw_text += t.surface;
    auto norm = normalize_word(t.surface);
    if (norm.empty()) continue;
    u.tokens.push_back(Token{std::move(norm), u.tokens.size()});
    u.tags.push_back(t.ne_tag == "O" ? TagClass::Plain : TagClass::NE);
  }
  if (u.tokens.empty()) {
    throw Error(ErrorCode::EmptyReference, u.id + ": no tokens left after normalization");
  }
  return u;
}

namespace {

TranscriptRecord parse_trn_line(std::string_view line, std::size_t line_no) {
  auto view = trim(line);
  auto open = view.rfind('(');
  if (view.empty() || view.back() != ')' || open == std::string_view::npos) {
    throw Error(ErrorCode::MalformedLine,
                "transcript line " + std::to_string(line_no) + ": expected 'text (id)'");
  }
  auto id = trim(view.substr(open + 1, view.size() - open - 2));
  if (id.empty()) {
    throw Error(ErrorCode::MalformedLine,
                "transcript line " + std::to_string(line_no) + ": empty id");
  }
  return {std::string(id), std::string(trim(view.substr(0, open)))};
}

TranscriptRecord parse_json_line(std::string_view line, std::size_t line_no) {
  const std::string where = "transcript line " + std::to_string(line_no);
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedLine, where + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string() || !j.contains("text") ||
      !j["text"].is_string()) {
    throw Error(ErrorCode::MalformedLine, where + ": needs string fields 'id' and 'text'");
  }
  return {j["id"].get<std::string>(), j["text"].get<std::string>()};
}

}  // namespace

std::vector<TranscriptRecord> read_transcripts(std::istream &in) {
  std::vector<TranscriptRecord> out;
  std::set<std::string> seen;
  std::optional<TranscriptFormat> format;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim(line);
    if (view.empty()) continue;
    if (!format) format = view.front() == '{' ? TranscriptFormat::JsonLines : TranscriptFormat::Trn;
    auto rec = *format == TranscriptFormat::JsonLines ? parse_json_line(view, line_no)
                                                      : parse_trn_line(view, line_no);
    if (!seen.insert(rec.id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate utterance id '" + rec.id + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_transcripts(std::ostream &out, const std::vector<TranscriptRecord> &records,
                       TranscriptFormat format) {
  for (const auto &r : records) {
    if (format == TranscriptFormat::Trn) {
      out << r.text << (r.text.empty() ? "" : " ") << '(' << r.id << ")\n";
    } else {
      json j;
      j["id"] = r.id;
      j["text"] = r.text;
      out << j.dump() << '\n';
    }
  }
}

namespace {

std::vector<std::size_t> index_list(const json &j, const char *key, const std::string &where) {
  std::vector<std::size_t> out;
  if (!j.contains(key)) return out;
  const auto &arr = j[key];
  if (!arr.is_array()) throw Error(ErrorCode::MalformedLine, where + ": '" + key + "' must be an array");
  for (const auto &v : arr) {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::MalformedLine, where + ": '" + key + "' entries must be non-negative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::map<std::string, AnnotationRecord> read_annotations(std::istream &in) {
  std::map<std::string, AnnotationRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim(line);
    if (view.empty()) continue;
    const std::string where = "annotation line " + std::to_string(line_no);
    json j;
    try {
      j = json::parse(view);
    } catch (const json::exception &e) {
      throw Error(ErrorCode::MalformedLine, where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw Error(ErrorCode::MalformedLine, where + ": needs a string 'id'");
    }
    AnnotationRecord rec;
    rec.id = j["id"].get<std::string>();
    rec.ne = index_list(j, "ne", where);
    rec.sent = index_list(j, "sent", where);
    if (j.contains("spelled")) {
      const auto &arr = j["spelled"];
      if (!arr.is_array()) throw Error(ErrorCode::MalformedLine, where + ": 'spelled' must be an array");
      for (const auto &s : arr) {
        if (!s.is_array() || s.size() < 2 || s.size() > 3 || !s[0].is_number_unsigned() ||
            !s[1].is_number_unsigned() || (s.size() == 3 && !s[2].is_string())) {
          throw Error(ErrorCode::MalformedLine,
                      where + ": spelled entries are [start, end, canonical]");
        }
        rec.spelled.push_back({s[0].get<std::size_t>(), s[1].get<std::size_t>(),
                               s.size() == 3 ? s[2].get<std::string>() : std::string()});
      }
    }
    if (out.count(rec.id) != 0) {
      throw Error(ErrorCode::DuplicateId, "duplicate annotation id '" + rec.id + "'");
    }
    auto id = rec.id;
    out.emplace(std::move(id), std::move(rec));
  }
  return out;
}

void write_annotations(std::ostream &out, const std::vector<AnnotationRecord> &records) {
  for (const auto &r : records) {
    json j;
    j["id"] = r.id;
    j["ne"] = r.ne;
    j["sent"] = r.sent;
    json spelled = json::array();
    for (const auto &s : r.spelled) spelled.push_back(json::array({s.start, s.end, s.canonical}));
    j["spelled"] = std::move(spelled);
    out << j.dump() << '\n';
  }
}

AnnotationRecord annotation_of(const AnnotatedUtterance &u) {
  AnnotationRecord rec;
  rec.id = u.id;
  for (std::size_t i = 0; i < u.tags.size(); ++i) {
    if (u.tags[i] == TagClass::NE) rec.ne.push_back(i);
    if (u.tags[i] == TagClass::SENT) rec.sent.push_back(i);
  }
  rec.spelled = u.spelled_spans;
  return rec;
}

std::vector<AnnotatedUtterance> read_references(std::istream &ref_in,
                                                std::istream *annotations_in) {
  const auto refs = read_transcripts(ref_in);
  std::map<std::string, AnnotationRecord> annotations;
  if (annotations_in != nullptr) annotations = read_annotations(*annotations_in);
  std::map<std::string, const TranscriptRecord *> by_id;
  for (const auto &r : refs) by_id.emplace(r.id, &r);
  for (const auto &[id, rec] : annotations) {
    if (by_id.count(id) == 0) {
      throw Error(ErrorCode::MissingReference, "annotation '" + id + "' has no reference");
    }
  }
  std::vector<AnnotatedUtterance> out;
  out.reserve(by_id.size());
  for (const auto &[id, ref] : by_id) {
    AnnotationRecord ann;
    if (auto it = annotations.find(id); it != annotations.end()) ann = it->second;
    auto u = make_annotated(id, ref->text, ann.ne, ann.sent, ann.spelled);
    if (u.tokens.empty()) {
      throw Error(ErrorCode::EmptyReference, "reference '" + id + "' is empty after normalization");
    }
    out.push_back(std::move(u));
  }
  return out;
}

PairsResult parse_pairs(std::istream &ref_in, std::istream &hyp_in,
                        std::istream *annotations_in) {
  auto refs = read_references(ref_in, annotations_in);
  const auto hyps = read_transcripts(hyp_in);
  std::map<std::string, const TranscriptRecord *> hyp_by_id;
  for (const auto &h : hyps) hyp_by_id.emplace(h.id, &h);
  std::set<std::string> ref_ids;
  for (const auto &r : refs) ref_ids.insert(r.id);
  for (const auto &h : hyps) {
    if (ref_ids.count(h.id) == 0) {
      throw Error(ErrorCode::MissingReference, "hypothesis '" + h.id + "' has no reference");
    }
  }
  PairsResult out;
  for (auto &ref : refs) {
    ScoringPair pair;
    pair.id = ref.id;
    if (auto it = hyp_by_id.find(ref.id); it != hyp_by_id.end()) {
      pair.hypothesis = tokenize(it->second->text);
    } else {
      out.warnings.push_back("reference '" + ref.id + "' has no hypothesis; scoring as all deletions");
    }
    pair.reference = std::move(ref);
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

}  // namespace swerkit

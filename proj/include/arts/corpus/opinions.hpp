//
// Copyright 2026 The arts-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ARTS_CORPUS_OPINIONS_HPP_
#define ARTS_CORPUS_OPINIONS_HPP_

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/text.hpp"

namespace arts {

// One row of the opinion annotation TSV:
//   sentence_id <TAB> aspect_id <TAB> opinion_from <TAB> opinion_to <TAB> polarity
struct OpinionRecord {
  std::string sentence_id;
  std::string aspect_id;
  OpinionSpan opinion;
};

inline std::vector<OpinionRecord> parse_opinion_tsv(std::string_view input) {
  std::vector<OpinionRecord> out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (line_no == 1 && !cols.empty() && cols[0] == "sentence_id") continue;
    if (cols.size() != 5) {
      throw SchemaError(line_no, "expected 5 tab-separated columns, got " +
                                     std::to_string(cols.size()));
    }
    auto to_num = [&](const std::string& v, const char* name) {
      std::size_t n = 0;
      auto res = std::from_chars(v.data(), v.data() + v.size(), n);
      if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        throw SchemaError(line_no, std::string(name) + " is not an integer");
      }
      return n;
    };
    auto pol = parse_polarity(cols[4]);
    if (!pol) {
      throw SchemaError(line_no, "invalid polarity \"" + cols[4] + "\"");
    }
    Span span{to_num(cols[2], "opinion_from"), to_num(cols[3], "opinion_to")};
    if (span.end <= span.start) {
      throw SchemaError(line_no, "opinion_to must exceed opinion_from");
    }
    out.push_back({cols[0], cols[1], {span, *pol}});
  }
  return out;
}

inline std::string serialize_opinion_tsv(const Dataset& ds) {
  std::string out;
  for (const auto& s : ds.sentences) {
    for (const auto& a : s.aspects) {
      for (const auto& o : a.opinions) {
        out += s.sentence_id + '\t' + a.aspect_id + '\t' +
               std::to_string(o.span.start) + '\t' +
               std::to_string(o.span.end) + '\t' +
               std::string(to_string(o.polarity)) + '\n';
      }
    }
  }
  return out;
}

// Adds opinion spans to the aspects they reference. Annotated aspects have
// their opinion lists replaced; unreferenced aspects are left untouched.
inline Dataset attach_opinions(Dataset ds,
                               const std::vector<OpinionRecord>& records) {
  std::map<std::pair<std::string, std::string>, AspectInstance*> index;
  std::map<std::string, const Sentence*> owner;
  for (auto& s : ds.sentences) {
    for (auto& a : s.aspects) {
      index[{s.sentence_id, a.aspect_id}] = &a;
      owner[s.sentence_id] = &s;
    }
  }
  std::vector<std::string> dangling;
  std::map<AspectInstance*, std::vector<OpinionSpan>> grouped;
  for (const auto& r : records) {
    auto it = index.find({r.sentence_id, r.aspect_id});
    if (it == index.end()) {
      dangling.push_back(r.sentence_id + "/" + r.aspect_id);
      continue;
    }
    grouped[it->second].push_back(r.opinion);
  }
  if (!dangling.empty()) {
    std::sort(dangling.begin(), dangling.end());
    dangling.erase(std::unique(dangling.begin(), dangling.end()),
                   dangling.end());
    throw ValidationError("opinion annotations reference unknown aspects: " +
                          text::join(dangling, ", "));
  }
  for (auto& [aspect, spans] : grouped) {
    std::sort(spans.begin(), spans.end(),
              [](const OpinionSpan& a, const OpinionSpan& b) {
                return a.span < b.span;
              });
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
    aspect->opinions = std::move(spans);
  }
  for (const auto& s : ds.sentences) validate_sentence(s);
  return ds;
}

inline Dataset attach_opinions(Dataset ds, std::string_view tsv) {
  return attach_opinions(std::move(ds), parse_opinion_tsv(tsv));
}

}  // namespace arts

#endif  // ARTS_CORPUS_OPINIONS_HPP_

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

#ifndef ARTS_CORPUS_JSONL_HPP_
#define ARTS_CORPUS_JSONL_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/spans.hpp"
#include "arts/corpus/types.hpp"
#include "arts/text.hpp"
#include "json.hpp"

namespace arts {

namespace jsonl_detail {

using Json = nlohmann::ordered_json;

inline const Json& require(const Json& obj, const char* key, std::size_t line,
                           const std::string& context) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError(line, context + "missing field \"" + key + "\"");
  }
  return obj.at(key);
}

inline std::string require_string(const Json& obj, const char* key,
                                  std::size_t line,
                                  const std::string& context = {}) {
  const Json& v = require(obj, key, line, context);
  if (!v.is_string()) {
    throw SchemaError(line, context + "field \"" + key + "\" must be a string");
  }
  return v.get<std::string>();
}

inline long long require_int(const Json& obj, const char* key,
                             std::size_t line,
                             const std::string& context = {}) {
  const Json& v = require(obj, key, line, context);
  if (!v.is_number_integer()) {
    throw SchemaError(line,
                      context + "field \"" + key + "\" must be an integer");
  }
  return v.get<long long>();
}

inline Polarity require_polarity(const Json& obj, std::size_t line,
                                 const std::string& context) {
  auto raw = require_string(obj, "polarity", line, context);
  auto p = parse_polarity(raw);
  if (!p) {
    throw SchemaError(line, context + "invalid polarity \"" + raw + "\"");
  }
  return *p;
}

}  // namespace jsonl_detail

// Calls `fn(line_number, json_object)` for every non-blank line.
template <typename Fn>
void for_each_jsonl(std::string_view input, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= input.size()) {
    auto end = input.find('\n', begin);
    if (end == std::string_view::npos) end = input.size();
    ++line_no;
    std::string_view line = input.substr(begin, end - begin);
    if (!text::trim(line).empty()) {
      jsonl_detail::Json obj;
      try {
        obj = jsonl_detail::Json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_no,
                         e.byte);
      }
      if (!obj.is_object()) {
        throw SchemaError(line_no, "expected a JSON object");
      }
      fn(line_no, obj);
    }
    begin = end + 1;
  }
}

// Parses one corpus-schema sentence object. Conflict-labelled aspects are
// appended to `conflicts` instead of the sentence.
inline Sentence sentence_from_json(const jsonl_detail::Json& obj,
                                   std::size_t line,
                                   std::vector<ConflictRecord>& conflicts,
                                   ParseDiagnostics* diagnostics = nullptr) {
  using namespace jsonl_detail;
  Sentence s;
  s.sentence_id = require_string(obj, "id", line);
  s.text = require_string(obj, "text", line);
  const Json& aspects = require(obj, "aspects", line, {});
  if (!aspects.is_array()) {
    throw SchemaError(line, "field \"aspects\" must be an array");
  }
  std::size_t index = 0;
  for (const auto& a : aspects) {
    std::string ctx = "aspects[" + std::to_string(index++) + "]: ";
    AspectInstance inst;
    inst.aspect_id = require_string(a, "aspect_id", line, ctx);
    inst.term = require_string(a, "term", line, ctx);
    long long from = require_int(a, "from", line, ctx);
    long long to = require_int(a, "to", line, ctx);
    auto raw = require_string(a, "polarity", line, ctx);
    auto span = resolve_term_span(s.text, inst.term, from, to);
    if (!span) {
      throw ValidationError("sentence " + s.sentence_id + " aspect " +
                            inst.aspect_id +
                            ": offsets do not match the term and it cannot "
                            "be re-derived uniquely");
    }
    if ((span->start != static_cast<std::size_t>(from) ||
         span->end != static_cast<std::size_t>(to)) &&
        diagnostics != nullptr) {
      diagnostics->rederived.push_back(
          {s.sentence_id, inst.aspect_id,
           Span{static_cast<std::size_t>(std::max(0LL, from)),
                static_cast<std::size_t>(std::max(0LL, to))},
           *span});
    }
    inst.term_span = *span;
    if (raw == "conflict") {
      conflicts.push_back({s.sentence_id, inst.aspect_id, inst.term, *span});
      continue;
    }
    auto pol = parse_polarity(raw);
    if (!pol) {
      throw SchemaError(line, ctx + "invalid polarity \"" + raw + "\"");
    }
    inst.polarity = *pol;
    if (a.contains("opinions")) {
      const Json& ops = a.at("opinions");
      if (!ops.is_array()) {
        throw SchemaError(line, ctx + "field \"opinions\" must be an array");
      }
      for (const auto& o : ops) {
        long long of = require_int(o, "from", line, ctx + "opinion: ");
        long long ot = require_int(o, "to", line, ctx + "opinion: ");
        if (of < 0 || ot <= of) {
          throw SchemaError(line, ctx + "opinion offsets out of order");
        }
        inst.opinions.push_back(
            {Span{static_cast<std::size_t>(of), static_cast<std::size_t>(ot)},
             require_polarity(o, line, ctx + "opinion: ")});
      }
    }
    s.aspects.push_back(std::move(inst));
  }
  validate_sentence(s);
  return s;
}

inline Dataset parse_jsonl(std::string_view input, std::string domain_name = {},
                           Split split = Split::kTest,
                           ParseDiagnostics* diagnostics = nullptr) {
  Dataset ds;
  ds.domain_name = std::move(domain_name);
  ds.split = split;
  for_each_jsonl(input, [&](std::size_t line, const jsonl_detail::Json& obj) {
    ds.sentences.push_back(
        sentence_from_json(obj, line, ds.conflicts, diagnostics));
  });
  validate_dataset(ds);
  return ds;
}

inline jsonl_detail::Json aspect_to_json(const AspectInstance& a) {
  jsonl_detail::Json j;
  j["aspect_id"] = a.aspect_id;
  j["term"] = a.term;
  j["from"] = a.term_span.start;
  j["to"] = a.term_span.end;
  j["polarity"] = to_string(a.polarity);
  auto ops = jsonl_detail::Json::array();
  for (const auto& o : a.opinions) {
    jsonl_detail::Json oj;
    oj["from"] = o.span.start;
    oj["to"] = o.span.end;
    oj["polarity"] = to_string(o.polarity);
    ops.push_back(std::move(oj));
  }
  j["opinions"] = std::move(ops);
  return j;
}

inline jsonl_detail::Json sentence_to_json(
    const Sentence& s, const std::vector<ConflictRecord>& conflicts = {}) {
  jsonl_detail::Json j;
  j["id"] = s.sentence_id;
  j["text"] = s.text;
  auto aspects = jsonl_detail::Json::array();
  for (const auto& a : s.aspects) aspects.push_back(aspect_to_json(a));
  for (const auto& c : conflicts) {
    if (c.sentence_id != s.sentence_id) continue;
    jsonl_detail::Json cj;
    cj["aspect_id"] = c.aspect_id;
    cj["term"] = c.term;
    cj["from"] = c.term_span.start;
    cj["to"] = c.term_span.end;
    cj["polarity"] = "conflict";
    cj["opinions"] = jsonl_detail::Json::array();
    aspects.push_back(std::move(cj));
  }
  j["aspects"] = std::move(aspects);
  return j;
}

inline std::string serialize_jsonl(const Dataset& ds) {
  std::string out;
  for (const auto& s : ds.sentences) {
    out += sentence_to_json(s, ds.conflicts).dump();
    out += '\n';
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_CORPUS_JSONL_HPP_

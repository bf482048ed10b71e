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

#ifndef ARTS_CORPUS_XML_HPP_
#define ARTS_CORPUS_XML_HPP_

#include <boost/property_tree/detail/rapidxml.hpp>
#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/spans.hpp"
#include "arts/corpus/types.hpp"
#include "arts/text.hpp"

// SemEval-2014 task 4 XML reader/writer. Aspect ids and opinion spans are
// extensions: `aspectTerm/@id` (defaults to "a<ordinal>") and an optional
// `aspectTerm/opinions/opinion` list.
namespace arts {

namespace xml_detail {

namespace rx = boost::property_tree::detail::rapidxml;

inline void line_column(std::string_view buffer, const char* where,
                        std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  if (where == nullptr) return;
  const char* begin = buffer.data();
  for (const char* p = begin; p < where && p < begin + buffer.size(); ++p) {
    if (*p == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

inline std::string_view attr(const rx::xml_node<char>* node,
                             const char* name) {
  auto* a = node->first_attribute(name);
  if (a == nullptr) return {};
  return {a->value(), a->value_size()};
}

inline bool has_attr(const rx::xml_node<char>* node, const char* name) {
  return node->first_attribute(name) != nullptr;
}

inline std::string node_text(const rx::xml_node<char>* node) {
  std::string out;
  for (auto* c = node->first_node(); c != nullptr; c = c->next_sibling()) {
    if (c->type() == rx::node_data || c->type() == rx::node_cdata) {
      out.append(c->value(), c->value_size());
    }
  }
  return out;
}

inline long long to_offset(std::string_view v, const std::string& where) {
  long long out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ValidationError(where + ": offset '" + std::string(v) +
                          "' is not an integer");
  }
  return out;
}

inline std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace xml_detail

inline Dataset parse_semeval_xml(std::string_view input,
                                 std::string domain_name = {},
                                 Split split = Split::kTest,
                                 ParseDiagnostics* diagnostics = nullptr) {
  namespace rx = xml_detail::rx;
  Dataset ds;
  ds.domain_name = std::move(domain_name);
  ds.split = split;

  std::vector<char> buffer(input.begin(), input.end());
  buffer.push_back('\0');
  rx::xml_document<char> doc;
  try {
    doc.parse<rx::parse_validate_closing_tags>(buffer.data());
  } catch (const rx::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    const char* where = e.where<char>();
    // `where` points into our copy, which has the same layout as the input.
    std::string_view copy(buffer.data(), input.size());
    xml_detail::line_column(copy, where, line, column);
    throw ParseError(std::string("malformed XML: ") + e.what(), line, column);
  }

  auto* root = doc.first_node("sentences");
  if (root == nullptr) {
    if (doc.first_node() == nullptr) return ds;
    throw ParseError("root element must be <sentences>", 1, 1);
  }
  if (auto d = xml_detail::attr(root, "domain");
      !d.empty() && ds.domain_name.empty()) {
    ds.domain_name = std::string(d);
  }

  std::vector<std::string> failures;
  for (auto* sn = root->first_node("sentence"); sn != nullptr;
       sn = sn->next_sibling("sentence")) {
    Sentence s;
    s.sentence_id = std::string(xml_detail::attr(sn, "id"));
    auto* tn = sn->first_node("text");
    if (tn != nullptr) s.text = xml_detail::node_text(tn);
    bool failed = false;
    auto* terms = sn->first_node("aspectTerms");
    std::size_t ordinal = 0;
    for (auto* an = terms ? terms->first_node("aspectTerm") : nullptr;
         an != nullptr; an = an->next_sibling("aspectTerm")) {
      ++ordinal;
      std::string aspect_id = xml_detail::has_attr(an, "id")
                                  ? std::string(xml_detail::attr(an, "id"))
                                  : "a" + std::to_string(ordinal);
      std::string term(xml_detail::attr(an, "term"));
      std::string where = "sentence " + s.sentence_id + " aspect " + aspect_id;
      long long from = xml_detail::to_offset(xml_detail::attr(an, "from"), where);
      long long to = xml_detail::to_offset(xml_detail::attr(an, "to"), where);
      auto span = resolve_term_span(s.text, term, from, to);
      if (!span) {
        failed = true;
        continue;
      }
      if ((span->start != static_cast<std::size_t>(from) ||
           span->end != static_cast<std::size_t>(to)) &&
          diagnostics != nullptr) {
        diagnostics->rederived.push_back(
            {s.sentence_id, aspect_id,
             Span{static_cast<std::size_t>(std::max(0LL, from)),
                  static_cast<std::size_t>(std::max(0LL, to))},
             *span});
      }
      std::string_view raw = xml_detail::attr(an, "polarity");
      auto polarity = parse_polarity(raw);
      if (!polarity) {
        if (raw == "conflict") {
          ds.conflicts.push_back({s.sentence_id, aspect_id, term, *span});
          continue;
        }
        throw ValidationError(where + ": unknown polarity '" +
                              std::string(raw) + "'");
      }
      AspectInstance a{aspect_id, term, *span, *polarity, {}};
      auto* ops = an->first_node("opinions");
      for (auto* on = ops ? ops->first_node("opinion") : nullptr; on != nullptr;
           on = on->next_sibling("opinion")) {
        auto op = parse_polarity(xml_detail::attr(on, "polarity"));
        if (!op) throw ValidationError(where + ": bad opinion polarity");
        long long of = xml_detail::to_offset(xml_detail::attr(on, "from"), where);
        long long ot = xml_detail::to_offset(xml_detail::attr(on, "to"), where);
        if (of < 0 || ot <= of) {
          throw ValidationError(where + ": bad opinion offsets");
        }
        a.opinions.push_back({Span{static_cast<std::size_t>(of),
                                   static_cast<std::size_t>(ot)},
                              *op});
      }
      s.aspects.push_back(std::move(a));
    }
    if (failed) {
      failures.push_back(s.sentence_id);
      continue;
    }
    validate_sentence(s);
    ds.sentences.push_back(std::move(s));
  }
  if (!failures.empty()) {
    throw ValidationError(
        "aspect offsets do not match their terms and cannot be re-derived "
        "uniquely in sentences: " +
        text::join(failures, ", "));
  }
  validate_dataset(ds);
  return ds;
}

inline std::string serialize_xml(const Dataset& ds) {
  using xml_detail::escape;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<sentences domain=\"" + escape(ds.domain_name) + "\" split=\"" +
         std::string(to_string(ds.split)) + "\">\n";
  for (const auto& s : ds.sentences) {
    out += "  <sentence id=\"" + escape(s.sentence_id) + "\">\n";
    out += "    <text>" + escape(s.text) + "</text>\n";
    std::vector<const ConflictRecord*> conflicts;
    for (const auto& c : ds.conflicts) {
      if (c.sentence_id == s.sentence_id) conflicts.push_back(&c);
    }
    if (!s.aspects.empty() || !conflicts.empty()) {
      out += "    <aspectTerms>\n";
      for (const auto& a : s.aspects) {
        out += "      <aspectTerm id=\"" + escape(a.aspect_id) + "\" term=\"" +
               escape(a.term) + "\" polarity=\"" +
               std::string(to_string(a.polarity)) + "\" from=\"" +
               std::to_string(a.term_span.start) + "\" to=\"" +
               std::to_string(a.term_span.end) + "\"";
        if (a.opinions.empty()) {
          out += "/>\n";
          continue;
        }
        out += ">\n        <opinions>\n";
        for (const auto& o : a.opinions) {
          out += "          <opinion from=\"" + std::to_string(o.span.start) +
                 "\" to=\"" + std::to_string(o.span.end) + "\" polarity=\"" +
                 std::string(to_string(o.polarity)) + "\"/>\n";
        }
        out += "        </opinions>\n      </aspectTerm>\n";
      }
      for (const auto* c : conflicts) {
        out += "      <aspectTerm id=\"" + escape(c->aspect_id) + "\" term=\"" +
               escape(c->term) + "\" polarity=\"conflict\" from=\"" +
               std::to_string(c->term_span.start) + "\" to=\"" +
               std::to_string(c->term_span.end) + "\"/>\n";
      }
      out += "    </aspectTerms>\n";
    }
    out += "  </sentence>\n";
  }
  out += "</sentences>\n";
  return out;
}

}  // namespace arts

#endif  // ARTS_CORPUS_XML_HPP_

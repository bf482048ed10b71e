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

#ifndef ARTS_STRATEGIES_ASPECT_SET_HPP_
#define ARTS_STRATEGIES_ASPECT_SET_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arts/corpus/tokenize.hpp"
#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"
#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/lexicon/pos.hpp"
#include "arts/text.hpp"

namespace arts {

struct AspectExpression {
  std::string aspect_term;
  std::string expression;
  Polarity polarity = Polarity::kPositive;

  friend bool operator==(const AspectExpression&,
                         const AspectExpression&) = default;
};

// Pool of standalone aspect expressions ("service is severely slow"), kept
// in insertion order. Neutral expressions are never stored.
class AspectSet {
 public:
  // Adds unless the (term, expression) pair is already present or the
  // expression is neutral. Returns whether it was added.
  bool add(AspectExpression e) {
    if (e.polarity == Polarity::kNeutral) return false;
    if (!seen_.insert({e.aspect_term, e.expression}).second) return false;
    expressions_.push_back(std::move(e));
    return true;
  }

  const std::vector<AspectExpression>& expressions() const {
    return expressions_;
  }
  std::size_t size() const { return expressions_.size(); }
  bool empty() const { return expressions_.empty(); }

  std::size_t count(Polarity p) const {
    std::size_t n = 0;
    for (const auto& e : expressions_) n += e.polarity == p;
    return n;
  }

 private:
  std::vector<AspectExpression> expressions_;
  std::set<std::pair<std::string, std::string>> seen_;
};

namespace aspect_set_detail {

inline bool looks_plural(std::string_view term) {
  auto words = text::split_whitespace(term);
  if (words.empty()) return false;
  std::string w = text::lower(words.back());
  if (w.size() < 3 || w.back() != 's') return false;
  return !text::ends_with(w, "ss") && !text::ends_with(w, "us") &&
         !text::ends_with(w, "is");
}

// Lowercases a sentence-initial capital unless the word keeps its case.
inline std::string soften_initial(std::string_view s) {
  auto first = text::split_whitespace(s);
  if (first.empty()) return std::string(s);
  const std::string& w = first.front();
  if (w == "I" || text::has_internal_capital(w) || text::is_all_caps(w)) {
    return std::string(s);
  }
  return text::decapitalize(s);
}

// Source slice from term through opinion when only a copula plus adverbs or
// determiners separate them ("service is severely slow").
inline std::optional<std::string> copula_slice(const TaggedSentence& ts,
                                               const Span& term,
                                               const Span& opinion) {
  if (term.end > opinion.start) return std::nullopt;
  bool saw_copula = false;
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const auto& t = ts.tokens[i];
    if (t.span.start < term.end || t.span.end > opinion.start) continue;
    const std::string w = ts.lower(i);
    if (!saw_copula) {
      if (!is_copula(w)) return std::nullopt;
      saw_copula = true;
    } else if (ts.tags[i] != PosTag::kAdverb && !is_determiner(w)) {
      return std::nullopt;
    }
  }
  if (!saw_copula) return std::nullopt;
  return std::string(ts.text.substr(term.start, opinion.end - term.start));
}

}  // namespace aspect_set_detail

// Renders one expression per (aspect, opinion) pair with a non-neutral
// opinion: the exact source slice for copular phrasing, otherwise
// "<term> is|are <opinion>".
inline AspectSet build_aspect_set(const Dataset& ds, const AntonymLexicon& lex) {
  using namespace aspect_set_detail;
  AspectSet out;
  bool any_opinions = false;
  for (const auto& s : ds.sentences) {
    std::optional<TaggedSentence> ts;
    for (const auto& a : s.aspects) {
      for (const auto& op : a.opinions) {
        any_opinions = true;
        if (op.polarity == Polarity::kNeutral) continue;
        if (!ts) ts = tag_sentence(s.text, lex);
        std::string expr;
        if (auto slice = copula_slice(*ts, a.term_span, op.span)) {
          expr = soften_initial(*slice);
        } else {
          expr = soften_initial(a.term) +
                 (looks_plural(a.term) ? " are " : " is ") +
                 std::string(op.span.slice(s.text));
        }
        out.add({soften_initial(a.term), expr, op.polarity});
      }
    }
  }
  if (!any_opinions) {
    throw BuildError("dataset carries no opinion annotations");
  }
  if (out.empty()) throw BuildError("no non-neutral aspect expressions");
  return out;
}

// TSV: aspect_term <TAB> expression <TAB> polarity.
inline std::string serialize_aspect_set(const AspectSet& set) {
  std::string out;
  for (const auto& e : set.expressions()) {
    out += e.aspect_term + '\t' + e.expression + '\t' +
           std::string(to_string(e.polarity)) + '\n';
  }
  return out;
}

inline AspectSet parse_aspect_set(std::string_view input) {
  AspectSet out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 3) {
      throw SchemaError(line_no, "expected aspect_term<TAB>expression<TAB>polarity");
    }
    auto pol = parse_polarity(cols[2]);
    if (!pol || *pol == Polarity::kNeutral) {
      throw SchemaError(line_no, "polarity must be positive or negative");
    }
    if (text::lower(cols[1]).find(text::lower(cols[0])) == std::string::npos) {
      throw SchemaError(line_no, "expression does not contain the aspect term");
    }
    out.add({cols[0], cols[1], *pol});
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_STRATEGIES_ASPECT_SET_HPP_

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

#ifndef ARTS_EDITGRAPH_OPS_HPP_
#define ARTS_EDITGRAPH_OPS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/editgraph/plan.hpp"
#include "arts/errors.hpp"
#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/lexicon/degree_adverbs.hpp"
#include "arts/lexicon/morphology.hpp"
#include "arts/lexicon/pos.hpp"
#include "arts/text.hpp"

namespace arts {

namespace edit_detail {

// True when no word token ends at or before `pos`.
inline bool is_sentence_initial(const TaggedSentence& ts, std::size_t pos) {
  for (const auto& t : ts.tokens) {
    if (t.span.end > pos) break;
    if (t.is_word()) return false;
  }
  return true;
}

// Words whose capitalization is meaningful on its own: "I", "iPad", "USB".
inline bool keeps_case(std::string_view word) {
  return word == "I" || text::starts_with(word, "I'") ||
         text::has_internal_capital(word) || text::is_all_caps(word);
}

inline const Token* token_at(const TaggedSentence& ts, std::size_t start) {
  for (const auto& t : ts.tokens) {
    if (t.span.start == start) return &t;
  }
  return nullptr;
}

inline bool is_verb_like(const TaggedSentence& ts, std::size_t i) {
  return ts.tags[i] == PosTag::kVerb || is_auxiliary(ts.lower(i));
}

// Nearest token satisfying `pred`, by token distance from `from`; ties go
// left. Returns tokens.size() when none does.
template <typename Pred>
std::size_t nearest_token(const TaggedSentence& ts, std::size_t from,
                          Pred pred) {
  const std::size_t n = ts.tokens.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (from >= d && pred(from - d)) return from - d;
    if (from + d < n && pred(from + d)) return from + d;
  }
  return n;
}

}  // namespace edit_detail

// Plan inserting `word` plus a space at `pos`. At the start of a capitalized
// sentence the inserted word takes the capital and the displaced word is
// lowercased unless its case is meaningful on its own.
inline EditPlan insert_word_before(const TaggedSentence& ts, std::size_t pos,
                                   std::string_view word, EditTag tag) {
  EditPlan plan;
  const Token* displaced = edit_detail::token_at(ts, pos);
  if (displaced != nullptr && edit_detail::is_sentence_initial(ts, pos) &&
      text::is_upper(displaced->text[0])) {
    plan.add({Span{pos, pos}, text::capitalize(word) + " ", tag});
    if (!edit_detail::keeps_case(displaced->text)) {
      plan.add({Span{pos, pos + 1},
                std::string(1, text::to_lower(displaced->text[0])), tag});
    }
    return plan;
  }
  plan.add({Span{pos, pos}, std::string(word) + " ", tag});
  return plan;
}

namespace edit_detail {

// Negates the verb or auxiliary at token `i`.
inline EditPlan negate_verb(const TaggedSentence& ts, std::size_t i,
                            const AntonymLexicon& lex) {
  const Token& tok = ts.tokens[i];
  const std::string w = ts.lower(i);
  if (is_copula_or_modal(w)) {
    EditPlan plan;
    plan.add({Span{tok.span.end, tok.span.end}, " not", EditTag::kNegate});
    return plan;
  }
  // An auxiliary in front of the verb carries the negation: "has changed".
  for (std::size_t j = i; j-- > 0;) {
    const std::string prev = ts.lower(j);
    if (is_auxiliary(prev)) {
      EditPlan plan;
      plan.add({Span{ts.tokens[j].span.end, ts.tokens[j].span.end}, " not",
                EditTag::kNegate});
      return plan;
    }
    if (ts.tags[j] != PosTag::kAdverb || prev == "not") break;
  }
  if (text::ends_with(w, "ing") && w.size() > 4) {
    return insert_word_before(ts, tok.span.start, "not", EditTag::kNegate);
  }
  const std::string lemma = lemmatize(w, PosTag::kVerb, lex);
  const char* aux = "do";
  switch (detect_inflection(w, lemma, PosTag::kVerb)) {
    case Inflection::kPast:
      aux = "did";
      break;
    case Inflection::kThirdSingular:
      aux = "does";
      break;
    default:
      break;
  }
  EditPlan plan;
  plan.add({tok.span, text::match_case(tok.text, std::string(aux) + " not " + lemma),
            EditTag::kNegate});
  return plan;
}

}  // namespace edit_detail

// Negates the opinion in `opinion`. An adjective head takes "not" in front;
// a verb head is negated directly (copulas and modals take a following "not",
// lexical verbs take do-support); any other head defers to the nearest verb.
inline EditPlan negate(const TaggedSentence& ts, const Span& opinion,
                       const AntonymLexicon& lex) {
  const std::size_t n = ts.tokens.size();
  const std::size_t head = opinion_head(ts, opinion);
  if (head == n) throw NotNegatable("opinion span holds no word");
  if (ts.tags[head] == PosTag::kAdjective) {
    return insert_word_before(ts, opinion.start, "not", EditTag::kNegate);
  }
  if (edit_detail::is_verb_like(ts, head)) {
    return edit_detail::negate_verb(ts, head, lex);
  }
  std::size_t verb = edit_detail::nearest_token(
      ts, head, [&](std::size_t i) { return edit_detail::is_verb_like(ts, i); });
  if (verb != n) return edit_detail::negate_verb(ts, verb, lex);
  std::size_t adj = edit_detail::nearest_token(
      ts, head, [&](std::size_t i) { return ts.tags[i] == PosTag::kAdjective; });
  if (adj != n) {
    return insert_word_before(ts, ts.tokens[adj].span.start, "not",
                              EditTag::kNegate);
  }
  throw NotNegatable("no verb or adjective in \"" + ts.text + "\"");
}

struct OpinionPolarity {
  Span span;
  Polarity polarity;
};

// Aligns "and"/"but"/"yet" with the polarities of the nearest opinions on
// either side: agreeing flanks get "and", disagreeing flanks get "but".
// Conjunctions with a missing or neutral flank are left alone.
inline EditPlan adjust_conjunctions(const TaggedSentence& ts,
                                    const std::vector<OpinionPolarity>& opinions) {
  EditPlan plan;
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const std::string w = ts.lower(i);
    if (w != "and" && w != "but" && w != "yet") continue;
    const Span& c = ts.tokens[i].span;
    const OpinionPolarity* before = nullptr;
    const OpinionPolarity* after = nullptr;
    for (const auto& op : opinions) {
      if (op.span.end <= c.start &&
          (before == nullptr || op.span.end > before->span.end)) {
        before = &op;
      }
      if (op.span.start >= c.end &&
          (after == nullptr || op.span.start < after->span.start)) {
        after = &op;
      }
    }
    if (before == nullptr || after == nullptr) continue;
    if (before->polarity == Polarity::kNeutral ||
        after->polarity == Polarity::kNeutral) {
      continue;
    }
    std::string want;
    if (before->polarity == after->polarity && w != "and") want = "and";
    if (before->polarity != after->polarity && w == "and") want = "but";
    if (!want.empty()) {
      plan.add({c, text::match_case(ts.tokens[i].text, want), EditTag::kConj});
    }
  }
  return plan;
}

// Plan putting `adverb` in front of the opinion. Empty when an intensifier
// from `adverbs` already sits directly before or at the start of the span.
inline EditPlan insert_adverb(const TaggedSentence& ts, const Span& opinion,
                              std::string_view adverb,
                              const DegreeAdverbLexicon& adverbs) {
  const std::size_t head = opinion_head(ts, opinion);
  if (head == ts.tokens.size() || (ts.tags[head] != PosTag::kAdjective &&
                                   ts.tags[head] != PosTag::kAdverb)) {
    throw NotExaggerable("opinion head is not an adjective or adverb");
  }
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const Token& t = ts.tokens[i];
    const bool just_before =
        t.span.end <= opinion.start &&
        (i + 1 == ts.tokens.size() || ts.tokens[i + 1].span.start >= opinion.start);
    const bool first_inside = t.span.start == opinion.start;
    if ((just_before || first_inside) && adverbs.contains(t.text)) return {};
  }
  return insert_word_before(ts, opinion.start, adverb, EditTag::kAdverb);
}

// Indefinite article for a following word, by its spelling.
inline std::string_view indefinite_article(std::string_view word) {
  const std::string w = text::lower(word);
  if (w.empty()) return "a";
  for (std::string_view p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (text::starts_with(w, p)) return "an";
  }
  for (std::string_view p :
       {"unique", "unit", "univers", "uniform", "union", "use", "usu", "uti",
        "eu", "ewe", "one", "once", "ubiq", "ukr"}) {
    if (text::starts_with(w, p)) return "a";
  }
  switch (w[0]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return "an";
    default:
      return "a";
  }
}

// Adds edits keeping "a"/"an" in agreement with the word an edit puts right
// after it ("a reasonable" -> "an unreasonable").
inline void fix_articles(const TaggedSentence& ts, EditPlan& plan) {
  const std::vector<Edit> edits = plan.edits();
  std::optional<std::size_t> last_start;
  for (const auto& e : edits) {
    if (last_start == e.span.start) continue;
    last_start = e.span.start;
    if (e.tag == EditTag::kConj || e.tag == EditTag::kArticle) continue;
    if (e.replacement.empty() || !text::is_word_char(e.replacement[0])) {
      continue;
    }
    std::size_t k = 0;
    while (k < ts.tokens.size() && ts.tokens[k].span.start != e.span.start) ++k;
    if (k == 0 || k == ts.tokens.size()) continue;
    const Token& art = ts.tokens[k - 1];
    const std::string a = text::lower(art.text);
    if (a != "a" && a != "an") continue;
    std::string_view gap(ts.text.data() + art.span.end,
                         e.span.start - art.span.end);
    if (text::trim(gap).size() != 0 || gap.empty()) continue;
    std::string_view next(e.replacement);
    std::size_t len = 0;
    while (len < next.size() && text::is_word_char(next[len])) ++len;
    std::string_view want = indefinite_article(next.substr(0, len));
    if (a != want) {
      plan.try_add({art.span, text::match_case(art.text, want),
                    EditTag::kArticle});
    }
  }
}

}  // namespace arts

#endif  // ARTS_EDITGRAPH_OPS_HPP_

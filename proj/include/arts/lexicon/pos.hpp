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

#ifndef ARTS_LEXICON_POS_HPP_
#define ARTS_LEXICON_POS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/tokenize.hpp"
#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/lexicon/morphology.hpp"
#include "arts/text.hpp"

namespace arts {

namespace pos_detail {

inline bool in_list(std::string_view w,
                    std::initializer_list<std::string_view> list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

}  // namespace pos_detail

inline bool is_determiner(std::string_view w) {
  return pos_detail::in_list(
      w, {"the", "a", "an", "this", "that", "these", "those", "my", "your",
          "his", "her", "its", "our", "their", "some", "any", "no", "every",
          "each", "all", "both", "either", "neither", "another", "such"});
}

inline bool is_conjunction(std::string_view w) {
  return pos_detail::in_list(
      w, {"and", "but", "or", "yet", "nor", "because", "although", "though",
          "while", "whereas", "if", "unless", "than", "since", "however"});
}

inline bool is_pronoun(std::string_view w) {
  return pos_detail::in_list(
      w, {"i", "you", "he", "she", "it", "we", "they", "me", "him", "us",
          "them", "myself", "yourself", "himself", "herself", "itself",
          "ourselves", "themselves", "who", "whom", "whose", "which", "what",
          "it's", "i'm", "i've", "i'd", "i'll", "you're", "we're", "they're",
          "that's", "there's", "he's", "she's", "there", "one"});
}

inline bool is_subject_pronoun(std::string_view w) {
  return pos_detail::in_list(w, {"i", "you", "he", "she", "we", "they", "it",
                                 "who"});
}

// Forms of "be" plus modals and the auxiliaries that take "not" directly.
inline bool is_copula_or_modal(std::string_view w) {
  return pos_detail::in_list(
      w, {"am", "is", "are", "was", "were", "be", "been", "being", "can",
          "could", "will", "would", "shall", "should", "may", "might", "must",
          "do", "does", "did", "it's", "that's", "i'm", "you're", "we're",
          "they're", "he's", "she's", "there's"});
}

inline bool is_copula(std::string_view w) {
  return pos_detail::in_list(
      w, {"am", "is", "are", "was", "were", "be", "been", "being", "seems",
          "seem", "seemed", "looks", "look", "looked", "tastes", "taste",
          "tasted", "feels", "feel", "felt", "remains", "remain", "remained",
          "becomes", "become", "became", "'s", "it's", "that's"});
}

inline bool is_auxiliary(std::string_view w) {
  return is_copula_or_modal(w) ||
         pos_detail::in_list(w, {"has", "have", "had", "having"});
}

inline bool is_preposition(std::string_view w) {
  return pos_detail::in_list(
      w, {"of", "in", "on", "at", "to", "for", "with", "by", "from", "about",
          "into", "onto", "over", "under", "through", "during", "without",
          "within", "between", "among", "against", "across", "after",
          "before", "behind", "beside", "besides", "near", "per", "via",
          "upon", "toward", "towards", "like", "as"});
}

// Intensifiers recognized as adverbs regardless of other readings.
inline bool is_intensifier(std::string_view w) {
  return pos_detail::in_list(
      w, {"very", "really", "extremely", "severely", "incredibly",
          "absolutely", "totally", "quite", "utterly", "remarkably", "too",
          "so", "rather", "fairly", "highly", "pretty", "super", "not",
          "never", "n't", "less", "more", "most", "least"});
}

inline bool is_closed_class(std::string_view w) {
  return is_determiner(w) || is_conjunction(w) || is_pronoun(w) ||
         is_auxiliary(w) || is_preposition(w);
}

// POS of `token` in isolation. A caller-provided tag wins; otherwise closed
// class lists, then lexicon membership (adjective > verb > noun > adverb),
// then suffix rules, then noun.
inline PosTag pos_of(std::string_view token, const AntonymLexicon& lex,
                     std::optional<PosTag> provided = std::nullopt) {
  if (provided) return *provided;
  std::string w = text::lower(token);
  if (w.empty() || !text::is_word_char(w[0])) return PosTag::kOther;
  if (std::all_of(w.begin(), w.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    return PosTag::kOther;
  }
  if (is_intensifier(w)) return PosTag::kAdverb;
  if (is_closed_class(w)) return PosTag::kOther;
  for (PosTag p : kContentPos) {
    if (lex.has_lemma(w, p)) return p;
    if (lex.exception_lemmas(w, p) != nullptr) return p;
  }
  if (find_irregular_by_form(w) != nullptr) return PosTag::kVerb;
  for (PosTag p : kContentPos) {
    for (const auto& c : morph_detail::strip_candidates(w, p)) {
      if (lex.has_lemma(c, p)) return p;
    }
  }
  if (text::ends_with(w, "ly")) return PosTag::kAdverb;
  for (std::string_view suf : {"ous", "ful", "able", "ive"}) {
    if (text::ends_with(w, suf)) return PosTag::kAdjective;
  }
  if (text::ends_with(w, "ize") || text::ends_with(w, "ate")) {
    return PosTag::kVerb;
  }
  return PosTag::kNoun;
}

// Whether `token` has a reading under `pos` in the lexicon (directly, via an
// exception list, or via a suffix-stripped lemma).
inline bool can_be(std::string_view token, PosTag pos,
                   const AntonymLexicon& lex) {
  std::string w = text::lower(token);
  if (lex.has_lemma(w, pos) || lex.exception_lemmas(w, pos) != nullptr) {
    return true;
  }
  for (const auto& c : morph_detail::strip_candidates(w, pos)) {
    if (lex.has_lemma(c, pos)) return true;
  }
  return false;
}

struct TaggedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<PosTag> tags;

  // Index of the first token overlapping `span`, or tokens.size().
  std::size_t first_token_in(const Span& span) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].span.overlaps(span)) return i;
    }
    return tokens.size();
  }

  std::vector<std::size_t> tokens_in(const Span& span) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].span.overlaps(span)) out.push_back(i);
    }
    return out;
  }

  std::string lower(std::size_t i) const { return text::lower(tokens[i].text); }
};

// Tags every token. Provided tags (one per token) are used verbatim. Without
// them, pos_of is refined by two context rules: a verb reading right after a
// determiner or possessive becomes a noun when the word can be one; a word
// right after a subject pronoun or infinitival "to" is a verb when it can be
// one.
inline TaggedSentence tag_sentence(std::string_view sentence,
                                   const AntonymLexicon& lex,
                                   const std::vector<PosTag>* provided = nullptr) {
  TaggedSentence out;
  out.text = std::string(sentence);
  out.tokens = tokenize(sentence);
  out.tags.reserve(out.tokens.size());
  if (provided != nullptr && provided->size() == out.tokens.size()) {
    out.tags = *provided;
    return out;
  }
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    PosTag tag = pos_of(out.tokens[i].text, lex);
    if (i > 0 && (tag == PosTag::kVerb || tag == PosTag::kAdjective ||
                  tag == PosTag::kNoun || tag == PosTag::kAdverb)) {
      std::string prev = text::lower(out.tokens[i - 1].text);
      std::string w = text::lower(out.tokens[i].text);
      if (is_determiner(prev) && tag == PosTag::kVerb &&
          can_be(w, PosTag::kNoun, lex)) {
        tag = PosTag::kNoun;
      } else if ((is_subject_pronoun(prev) || prev == "to") &&
                 tag != PosTag::kVerb && can_be(w, PosTag::kVerb, lex) &&
                 !is_intensifier(w)) {
        tag = PosTag::kVerb;
      }
    }
    out.tags.push_back(tag);
  }
  return out;
}

// Head token of an opinion span: the first adjective or verb inside it,
// otherwise its last word token. Returns tokens.size() for an empty span.
inline std::size_t opinion_head(const TaggedSentence& ts, const Span& span) {
  auto idx = ts.tokens_in(span);
  for (auto i : idx) {
    if (ts.tags[i] == PosTag::kAdjective || ts.tags[i] == PosTag::kVerb) {
      return i;
    }
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (ts.tokens[*it].is_word()) return *it;
  }
  return ts.tokens.size();
}

}  // namespace arts

#endif  // ARTS_LEXICON_POS_HPP_

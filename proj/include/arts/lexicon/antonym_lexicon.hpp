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

#ifndef ARTS_LEXICON_ANTONYM_LEXICON_HPP_
#define ARTS_LEXICON_ANTONYM_LEXICON_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arts/corpus/tokenize.hpp"
#include "arts/corpus/types.hpp"
#include "arts/text.hpp"

namespace arts {

enum class PosTag { kAdjective, kVerb, kNoun, kAdverb, kOther };

inline constexpr std::array<PosTag, 4> kContentPos = {
    PosTag::kAdjective, PosTag::kVerb, PosTag::kNoun, PosTag::kAdverb};

inline std::string_view to_string(PosTag p) {
  switch (p) {
    case PosTag::kAdjective:
      return "adjective";
    case PosTag::kVerb:
      return "verb";
    case PosTag::kNoun:
      return "noun";
    case PosTag::kAdverb:
      return "adverb";
    case PosTag::kOther:
      return "other";
  }
  return "other";
}

inline std::optional<PosTag> parse_pos(std::string_view s) {
  if (s == "adjective" || s == "adj" || s == "a" || s == "s") {
    return PosTag::kAdjective;
  }
  if (s == "verb" || s == "v") return PosTag::kVerb;
  if (s == "noun" || s == "n") return PosTag::kNoun;
  if (s == "adverb" || s == "adv" || s == "r") return PosTag::kAdverb;
  if (s == "other") return PosTag::kOther;
  return std::nullopt;
}

// POS-indexed antonym relation plus the morphological data needed to map
// inflected surface forms to lemmas. Antonymy is kept symmetric: every
// insertion adds both directions. Lemmas are stored lowercase with WordNet's
// underscores turned into spaces.
class AntonymLexicon {
 public:
  static std::string normalize(std::string_view lemma) {
    std::string out = text::lower(lemma);
    for (char& c : out) {
      if (c == '_') c = ' ';
    }
    return out;
  }

  void add_lemma(std::string_view lemma, PosTag pos) {
    table(pos).lemmas.insert(normalize(lemma));
  }

  void add_antonym_pair(std::string_view a, std::string_view b, PosTag pos) {
    auto la = normalize(a);
    auto lb = normalize(b);
    if (la == lb) return;
    auto& t = table(pos);
    t.lemmas.insert(la);
    t.lemmas.insert(lb);
    t.antonyms[la].insert(lb);
    t.antonyms[lb].insert(la);
  }

  void add_exception(std::string_view form, std::string_view lemma,
                     PosTag pos) {
    auto f = normalize(form);
    auto l = normalize(lemma);
    auto& t = table(pos);
    auto& lemmas = t.exceptions[f];
    if (std::find(lemmas.begin(), lemmas.end(), l) == lemmas.end()) {
      lemmas.push_back(l);
    }
    auto& forms = t.exception_forms[l];
    if (std::find(forms.begin(), forms.end(), f) == forms.end()) {
      forms.push_back(f);
    }
  }

  // Antonyms of `lemma` under `pos`, sorted.
  std::vector<std::string> antonyms(std::string_view lemma, PosTag pos) const {
    const auto* t = find_table(pos);
    if (t == nullptr) return {};
    auto it = t->antonyms.find(normalize(lemma));
    if (it == t->antonyms.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

  bool has_lemma(std::string_view lemma, PosTag pos) const {
    const auto* t = find_table(pos);
    return t != nullptr && t->lemmas.count(std::string(lemma)) > 0;
  }

  // Lemmas listed for an irregular inflected form, in file order.
  const std::vector<std::string>* exception_lemmas(std::string_view form,
                                                   PosTag pos) const {
    const auto* t = find_table(pos);
    if (t == nullptr) return nullptr;
    auto it = t->exceptions.find(std::string(form));
    return it == t->exceptions.end() ? nullptr : &it->second;
  }

  // Irregular inflected forms recorded for a lemma, in file order.
  const std::vector<std::string>* exception_forms(std::string_view lemma,
                                                  PosTag pos) const {
    const auto* t = find_table(pos);
    if (t == nullptr) return nullptr;
    auto it = t->exception_forms.find(std::string(lemma));
    return it == t->exception_forms.end() ? nullptr : &it->second;
  }

  // Surface-form vocabulary (lowercase) with frequencies, normally taken
  // from the training split of the same domain.
  void set_vocabulary(std::map<std::string, std::size_t> vocabulary) {
    vocabulary_ = std::move(vocabulary);
  }

  void add_vocabulary(const Dataset& ds) {
    for (const auto& s : ds.sentences) {
      for (const auto& t : tokenize(s.text)) {
        if (t.is_word()) ++vocabulary_[text::lower(t.text)];
      }
    }
  }

  const std::map<std::string, std::size_t>& vocabulary() const {
    return vocabulary_;
  }

  bool in_vocabulary(std::string_view word) const {
    return vocabulary_.count(text::lower(word)) > 0;
  }

  // Visits every stored (lemma, antonym, pos) triple.
  template <typename Fn>
  void for_each_pair(Fn&& fn) const {
    for (auto pos : kContentPos) {
      const auto* t = find_table(pos);
      if (t == nullptr) continue;
      for (const auto& [lemma, ants] : t->antonyms) {
        for (const auto& a : ants) fn(lemma, a, pos);
      }
    }
  }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for_each_pair([&n](const auto&, const auto&, PosTag) { ++n; });
    return n;
  }

  std::size_t lemma_count(PosTag pos) const {
    const auto* t = find_table(pos);
    return t == nullptr ? 0 : t->lemmas.size();
  }

  bool empty() const { return pair_count() == 0; }

 private:
  struct PosTable {
    std::unordered_set<std::string> lemmas;
    std::unordered_map<std::string, std::set<std::string>> antonyms;
    std::unordered_map<std::string, std::vector<std::string>> exceptions;
    std::unordered_map<std::string, std::vector<std::string>> exception_forms;
  };

  static std::size_t index(PosTag pos) { return static_cast<std::size_t>(pos); }

  PosTable& table(PosTag pos) { return tables_[index(pos)]; }
  const PosTable* find_table(PosTag pos) const {
    return pos == PosTag::kOther ? nullptr : &tables_[index(pos)];
  }

  std::array<PosTable, 5> tables_;
  std::map<std::string, std::size_t> vocabulary_;
};

}  // namespace arts

#endif  // ARTS_LEXICON_ANTONYM_LEXICON_HPP_

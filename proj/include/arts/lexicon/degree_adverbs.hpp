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

#ifndef ARTS_LEXICON_DEGREE_ADVERBS_HPP_
#define ARTS_LEXICON_DEGREE_ADVERBS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"
#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/lexicon/pos.hpp"
#include "arts/rng.hpp"
#include "arts/text.hpp"

namespace arts {

// Fixed intensifier inventory (version 1). Changing it changes outputs.
inline constexpr std::array<std::string_view, 10> kDegreeAdverbWhitelist = {
    "very",       "really",  "extremely", "severely", "incredibly",
    "absolutely", "totally", "quite",     "utterly",  "remarkably"};

inline bool in_degree_whitelist(std::string_view w) {
  return std::find(kDegreeAdverbWhitelist.begin(), kDegreeAdverbWhitelist.end(),
                   w) != kDegreeAdverbWhitelist.end();
}

class DegreeAdverbLexicon {
 public:
  struct Entry {
    std::string form;
    std::size_t frequency = 0;
    bool operator==(const Entry&) const = default;
  };

  DegreeAdverbLexicon() = default;

  // Adds `form` (lowercased) or bumps its frequency by `count`.
  void add(std::string_view form, std::size_t count = 0) {
    std::string f = text::lower(text::trim(form));
    if (f.empty()) return;
    for (auto& e : entries_) {
      if (e.form == f) {
        e.frequency += count;
        return;
      }
    }
    entries_.push_back({std::move(f), count});
  }

  bool contains(std::string_view form) const {
    std::string f = text::lower(form);
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.form == f; });
  }

  std::size_t frequency(std::string_view form) const {
    std::string f = text::lower(form);
    for (const auto& e : entries_) {
      if (e.form == f) return e.frequency;
    }
    return 0;
  }

  // Uniform draw over entries. Requires a non-empty lexicon.
  const std::string& sample(Rng& rng) const {
    if (entries_.empty()) throw DomainError("degree-adverb lexicon is empty");
    return entries_[rng.uniform(entries_.size())].form;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

// Mines intensifiers from a training split: adverb-tagged tokens directly in
// front of an annotated opinion head, restricted to the whitelist. The result
// always holds the full whitelist, in whitelist order, with mined counts.
inline DegreeAdverbLexicon build_degree_adverbs(const Dataset& train,
                                                const AntonymLexicon& lex) {
  DegreeAdverbLexicon out;
  for (auto w : kDegreeAdverbWhitelist) out.add(w);
  for (const auto& s : train.sentences) {
    bool any = false;
    for (const auto& a : s.aspects) any = any || !a.opinions.empty();
    if (!any) continue;
    auto ts = tag_sentence(s.text, lex);
    for (const auto& a : s.aspects) {
      for (const auto& op : a.opinions) {
        std::size_t head = opinion_head(ts, op.span);
        if (head == 0 || head >= ts.tokens.size()) continue;
        std::size_t prev = head - 1;
        if (ts.tags[prev] != PosTag::kAdverb) continue;
        std::string w = ts.lower(prev);
        if (in_degree_whitelist(w)) out.add(w, 1);
      }
    }
  }
  return out;
}

// "form<TAB>frequency" per line.
inline std::string serialize_degree_adverbs(const DegreeAdverbLexicon& lex) {
  std::string out;
  for (const auto& e : lex.entries()) {
    out += e.form;
    out += '\t';
    out += std::to_string(e.frequency);
    out += '\n';
  }
  return out;
}

// Reads the export format; the frequency column is optional. Blank lines and
// '#' comments are skipped.
inline DegreeAdverbLexicon parse_degree_adverbs(std::string_view input) {
  DegreeAdverbLexicon out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() > 2 || text::trim(cols[0]).empty()) {
      throw SchemaError(line_no, "expected form[<TAB>frequency]");
    }
    std::size_t freq = 0;
    if (cols.size() == 2) {
      try {
        std::size_t used = 0;
        freq = std::stoull(cols[1], &used);
        if (used != cols[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw SchemaError(line_no, "bad frequency \"" + cols[1] + "\"");
      }
    }
    out.add(cols[0], freq);
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_LEXICON_DEGREE_ADVERBS_HPP_

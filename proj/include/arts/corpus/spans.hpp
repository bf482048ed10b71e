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

#ifndef ARTS_CORPUS_SPANS_HPP_
#define ARTS_CORPUS_SPANS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/types.hpp"

namespace arts {

// Start offsets of every (possibly overlapping) occurrence of `needle`.
inline std::vector<std::size_t> find_all(std::string_view haystack,
                                         std::string_view needle) {
  std::vector<std::size_t> hits;
  if (needle.empty()) return hits;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    hits.push_back(pos);
  }
  return hits;
}

// Span of `term` given the annotated offsets. When the offsets do not select
// the term, falls back to the term's unique occurrence in the text; returns
// nullopt when the term is absent or ambiguous.
inline std::optional<Span> resolve_term_span(std::string_view text,
                                             std::string_view term,
                                             long long from, long long to) {
  if (from >= 0 && to > from && static_cast<std::size_t>(to) <= text.size()) {
    Span s{static_cast<std::size_t>(from), static_cast<std::size_t>(to)};
    if (s.slice(text) == term) return s;
  }
  auto hits = find_all(text, term);
  if (hits.size() != 1) return std::nullopt;
  return Span{hits[0], hits[0] + term.size()};
}

// Non-fatal observations made while reading a corpus.
struct ParseDiagnostics {
  struct Rederived {
    std::string sentence_id;
    std::string aspect_id;
    Span annotated;
    Span resolved;
  };
  std::vector<Rederived> rederived;
};

}  // namespace arts

#endif  // ARTS_CORPUS_SPANS_HPP_

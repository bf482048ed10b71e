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

#ifndef ARTS_CORPUS_TYPES_HPP_
#define ARTS_CORPUS_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arts/errors.hpp"

namespace arts {

enum class Polarity { kPositive, kNegative, kNeutral };

inline std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
  }
  return "neutral";
}

// Returns nullopt for anything outside the three-label scheme, including
// "conflict"; callers decide whether that is an error or a side-channel
// record.
inline std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "positive") return Polarity::kPositive;
  if (s == "negative") return Polarity::kNegative;
  if (s == "neutral") return Polarity::kNeutral;
  return std::nullopt;
}

// Half-open character range [start, end) into the owning text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
  bool contains(const Span& o) const {
    return start <= o.start && o.end <= end;
  }
  bool valid_for(std::string_view text) const {
    return start < end && end <= text.size();
  }
  std::string_view slice(std::string_view text) const {
    return text.substr(start, end - start);
  }

  friend auto operator<=>(const Span&, const Span&) = default;
};

struct OpinionSpan {
  Span span;
  Polarity polarity = Polarity::kNeutral;

  friend bool operator==(const OpinionSpan&, const OpinionSpan&) = default;
};

struct AspectInstance {
  std::string aspect_id;
  std::string term;
  Span term_span;
  Polarity polarity = Polarity::kNeutral;
  std::vector<OpinionSpan> opinions;

  friend bool operator==(const AspectInstance&,
                         const AspectInstance&) = default;
};

struct Sentence {
  std::string sentence_id;
  std::string text;
  std::vector<AspectInstance> aspects;

  const AspectInstance* find_aspect(std::string_view aspect_id) const {
    for (const auto& a : aspects) {
      if (a.aspect_id == aspect_id) return &a;
    }
    return nullptr;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class Split { kTrain, kDev, kTest };

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "test";
}

inline std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "dev") return Split::kDev;
  if (s == "test") return Split::kTest;
  return std::nullopt;
}

// An aspect whose raw label was "conflict". Kept out of Sentence::aspects
// and only dropped by filter_conflicts, so removals stay countable.
struct ConflictRecord {
  std::string sentence_id;
  std::string aspect_id;
  std::string term;
  Span term_span;

  friend bool operator==(const ConflictRecord&,
                         const ConflictRecord&) = default;
};

struct Dataset {
  std::string domain_name;
  Split split = Split::kTest;
  std::vector<Sentence> sentences;
  std::vector<ConflictRecord> conflicts;

  std::size_t instance_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.aspects.size();
    return n;
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Checks every structural invariant of a sentence. Throws ValidationError
// naming the sentence on the first violation.
inline void validate_sentence(const Sentence& s) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("sentence " + s.sentence_id + ": " + what);
  };
  std::set<std::string> ids;
  for (const auto& a : s.aspects) {
    if (!ids.insert(a.aspect_id).second) {
      fail("duplicate aspect id " + a.aspect_id);
    }
    if (!a.term_span.valid_for(s.text)) {
      fail("aspect " + a.aspect_id + " span out of bounds");
    }
    if (a.term_span.slice(s.text) != a.term) {
      fail("aspect " + a.aspect_id + " term '" + a.term +
           "' does not match text at its span");
    }
    for (std::size_t i = 0; i < a.opinions.size(); ++i) {
      const auto& o = a.opinions[i].span;
      if (!o.valid_for(s.text)) {
        fail("aspect " + a.aspect_id + " opinion span out of bounds");
      }
      if (o.overlaps(a.term_span)) {
        fail("aspect " + a.aspect_id + " opinion span overlaps its term");
      }
      for (std::size_t j = i + 1; j < a.opinions.size(); ++j) {
        if (o.overlaps(a.opinions[j].span)) {
          fail("aspect " + a.aspect_id + " has overlapping opinion spans");
        }
      }
    }
  }
}

inline void validate_dataset(const Dataset& ds) {
  std::set<std::string> ids;
  for (const auto& s : ds.sentences) {
    if (!ids.insert(s.sentence_id).second) {
      throw ValidationError("duplicate sentence id " + s.sentence_id);
    }
    validate_sentence(s);
  }
}

}  // namespace arts

#endif  // ARTS_CORPUS_TYPES_HPP_

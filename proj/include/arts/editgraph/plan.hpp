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

#ifndef ARTS_EDITGRAPH_PLAN_HPP_
#define ARTS_EDITGRAPH_PLAN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"

namespace arts {

enum class EditTag { kFlip, kNegate, kConj, kAdverb, kAppend, kArticle };

inline std::string_view to_string(EditTag t) {
  switch (t) {
    case EditTag::kFlip:
      return "flip";
    case EditTag::kNegate:
      return "negate";
    case EditTag::kConj:
      return "conj";
    case EditTag::kAdverb:
      return "adverb";
    case EditTag::kAppend:
      return "append";
    case EditTag::kArticle:
      return "article";
  }
  return "flip";
}

// Replace source range `span` with `replacement`. A zero-width span is an
// insertion at span.start.
struct Edit {
  Span span;
  std::string replacement;
  EditTag tag = EditTag::kFlip;

  std::ptrdiff_t delta() const {
    return static_cast<std::ptrdiff_t>(replacement.size()) -
           static_cast<std::ptrdiff_t>(span.size());
  }
  bool is_insert() const { return span.empty(); }

  friend bool operator==(const Edit&, const Edit&) = default;
};

// Orders by start; at a shared start an insertion precedes a replacement.
inline bool edit_before(const Edit& a, const Edit& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  return a.span.end < b.span.end;
}

// Whether two edits cannot coexist in one plan. Two insertions at the same
// point conflict because their relative order would be ambiguous.
inline bool edits_conflict(const Edit& a, const Edit& b) {
  if (a.is_insert() && b.is_insert()) return a.span.start == b.span.start;
  if (a.is_insert()) {
    return b.span.start < a.span.start && a.span.start < b.span.end;
  }
  if (b.is_insert()) {
    return a.span.start < b.span.start && b.span.start < a.span.end;
  }
  return a.span.overlaps(b.span);
}

// Non-overlapping edits kept sorted by edit_before.
class EditPlan {
 public:
  EditPlan() = default;
  explicit EditPlan(std::vector<Edit> edits) {
    for (auto& e : edits) add(std::move(e));
  }

  // Inserts `e`; throws PlanError on conflict with an existing edit.
  void add(Edit e) {
    if (auto* c = find_conflict(e)) {
      throw PlanError("edit [" + std::to_string(e.span.start) + "," +
                      std::to_string(e.span.end) + ") overlaps edit [" +
                      std::to_string(c->span.start) + "," +
                      std::to_string(c->span.end) + ")");
    }
    auto it = std::upper_bound(edits_.begin(), edits_.end(), e, edit_before);
    edits_.insert(it, std::move(e));
  }

  // Inserts `e` unless it conflicts; returns whether it was added.
  bool try_add(Edit e) {
    if (find_conflict(e) != nullptr) return false;
    add(std::move(e));
    return true;
  }

  void merge(const EditPlan& other) {
    for (const auto& e : other.edits_) add(e);
  }

  bool conflicts_with(const Edit& e) const { return find_conflict(e) != nullptr; }

  // Throws PlanError unless every edit lies within a text of `size` bytes.
  void validate(std::size_t size) const {
    for (const auto& e : edits_) {
      if (e.span.start > e.span.end || e.span.end > size) {
        throw PlanError("edit [" + std::to_string(e.span.start) + "," +
                        std::to_string(e.span.end) + ") outside text of length " +
                        std::to_string(size));
      }
    }
  }

  const std::vector<Edit>& edits() const { return edits_; }
  bool empty() const { return edits_.empty(); }
  std::size_t size() const { return edits_.size(); }

  bool has_tag(EditTag t) const {
    return std::any_of(edits_.begin(), edits_.end(),
                       [t](const Edit& e) { return e.tag == t; });
  }

 private:
  const Edit* find_conflict(const Edit& e) const {
    for (const auto& x : edits_) {
      if (edits_conflict(x, e)) return &x;
    }
    return nullptr;
  }

  std::vector<Edit> edits_;
};

// Offset remapping from source to edited text, derived from an applied plan.
class SpanMap {
 public:
  SpanMap() = default;
  explicit SpanMap(const EditPlan& plan) {
    for (const auto& e : plan.edits()) {
      pieces_.push_back({e.span.start, e.span.end, e.delta()});
    }
  }

  // New position of a span start at source offset `s`. Text inserted at `s`
  // lands before it.
  std::size_t map_start(std::size_t s) const {
    std::ptrdiff_t shift = 0;
    for (const auto& p : pieces_) {
      if (p.end <= s) shift += p.delta;
    }
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(s) + shift);
  }

  // New position of a span end at source offset `e`. Text inserted at `e`
  // lands after it; a replacement ending at `e` is included.
  std::size_t map_end(std::size_t e) const {
    std::ptrdiff_t shift = 0;
    for (const auto& p : pieces_) {
      if (p.end < e || (p.end == e && p.start < p.end)) shift += p.delta;
    }
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(e) + shift);
  }

  // Remapped span, or nullopt when `span` cuts through a replaced range.
  std::optional<Span> try_map(const Span& span) const {
    for (const auto& p : pieces_) {
      if (p.start == p.end) continue;
      const bool covers = span.start <= p.start && p.end <= span.end &&
                          !span.empty();
      const bool touches = span.empty()
                               ? (p.start < span.start && span.start < p.end)
                               : (span.start < p.end && p.start < span.end);
      if (touches && !covers) return std::nullopt;
    }
    if (span.empty()) {
      auto s = map_start(span.start);
      return Span{s, s};
    }
    return Span{map_start(span.start), map_end(span.end)};
  }

  Span map(const Span& span) const {
    auto out = try_map(span);
    if (!out) {
      throw PlanError("span [" + std::to_string(span.start) + "," +
                      std::to_string(span.end) +
                      ") partially overlaps an edit");
    }
    return *out;
  }

  bool identity() const { return pieces_.empty(); }

 private:
  struct Piece {
    std::size_t start;
    std::size_t end;
    std::ptrdiff_t delta;
  };
  std::vector<Piece> pieces_;
};

struct Applied {
  std::string text;
  SpanMap map;
};

inline Applied apply_edits(std::string_view text, const EditPlan& plan) {
  plan.validate(text.size());
  Applied out;
  std::size_t cursor = 0;
  for (const auto& e : plan.edits()) {
    out.text.append(text.substr(cursor, e.span.start - cursor));
    out.text.append(e.replacement);
    cursor = e.span.end;
  }
  out.text.append(text.substr(cursor));
  out.map = SpanMap(plan);
  return out;
}

// Applies `plan` to a sentence and carries every aspect and opinion span
// over. Terms are re-read from the new text so case changes follow.
inline Sentence apply_to_sentence(const Sentence& s, const EditPlan& plan) {
  auto applied = apply_edits(s.text, plan);
  Sentence out = s;
  out.text = std::move(applied.text);
  for (auto& a : out.aspects) {
    a.term_span = applied.map.map(a.term_span);
    a.term = a.term_span.slice(out.text);
    for (auto& op : a.opinions) op.span = applied.map.map(op.span);
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_EDITGRAPH_PLAN_HPP_

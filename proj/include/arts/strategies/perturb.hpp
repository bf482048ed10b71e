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

#ifndef ARTS_STRATEGIES_PERTURB_HPP_
#define ARTS_STRATEGIES_PERTURB_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arts/corpus/tokenize.hpp"
#include "arts/corpus/types.hpp"
#include "arts/editgraph.hpp"
#include "arts/errors.hpp"
#include "arts/lexicon.hpp"
#include "arts/rng.hpp"
#include "arts/strategies/aspect_set.hpp"
#include "arts/strategies/types.hpp"

namespace arts {

// Plan reversing every opinion of `aspect`: an antonym of the head word with
// the same POS when the lexicon has one, otherwise a negation. Spans that
// admit neither are left alone; NotNegatable escapes only when no span could
// be handled.
inline EditPlan flip_aspect(const TaggedSentence& ts,
                            const AspectInstance& aspect,
                            const AntonymLexicon& lex, Rng& rng) {
  if (aspect.opinions.empty()) {
    throw DomainError("aspect " + aspect.aspect_id + " has no opinion spans");
  }
  EditPlan plan;
  std::size_t handled = 0;
  std::string last_error;
  for (const auto& op : aspect.opinions) {
    const std::size_t head = opinion_head(ts, op.span);
    if (head == ts.tokens.size()) continue;
    const PosTag pos = ts.tags[head];
    EditPlan local;
    if (pos != PosTag::kOther) {
      const Token& tok = ts.tokens[head];
      const std::string lemma = lemmatize(tok.text, pos, lex);
      auto choice =
          select_antonym(lex.antonyms(lemma, pos), pos, lex.vocabulary(), rng);
      if (choice) {
        local.add({tok.span, realize_like(tok.text, *choice, pos, lex),
                   EditTag::kFlip});
      }
    }
    if (local.empty()) {
      try {
        local = negate(ts, op.span, lex);
      } catch (const NotNegatable& e) {
        last_error = e.what();
        continue;
      }
    }
    bool fits = std::none_of(
        local.edits().begin(), local.edits().end(),
        [&](const Edit& e) { return plan.conflicts_with(e); });
    if (!fits) continue;
    plan.merge(local);
    ++handled;
  }
  if (handled == 0) {
    throw NotNegatable(last_error.empty() ? "no opinion span could be reversed"
                                          : last_error);
  }
  return plan;
}

namespace perturb_detail {

// Post-edit polarity of every opinion span in source coordinates.
inline std::vector<OpinionPolarity> opinion_polarities(
    const Sentence& s, const std::set<std::string>& reversed_aspects) {
  std::vector<OpinionPolarity> out;
  for (const auto& a : s.aspects) {
    const bool rev = reversed_aspects.count(a.aspect_id) > 0;
    for (const auto& op : a.opinions) {
      Polarity p = op.polarity;
      if (rev && p != Polarity::kNeutral) p = reverse(p);
      out.push_back({op.span, p});
    }
  }
  return out;
}

// Adds conjunction and article fixes, applies, and rewrites the labels of
// reversed aspects.
inline Sentence finish(const Sentence& s, const TaggedSentence& ts,
                       EditPlan plan,
                       const std::set<std::string>& reversed_aspects) {
  auto conj = adjust_conjunctions(ts, opinion_polarities(s, reversed_aspects));
  for (const auto& e : conj.edits()) plan.try_add(e);
  fix_articles(ts, plan);
  Sentence out = apply_to_sentence(s, plan);
  for (auto& a : out.aspects) {
    if (reversed_aspects.count(a.aspect_id) == 0) continue;
    if (a.polarity != Polarity::kNeutral) a.polarity = reverse(a.polarity);
    for (auto& op : a.opinions) {
      if (op.polarity != Polarity::kNeutral) op.polarity = reverse(op.polarity);
    }
  }
  return out;
}

inline GeneratedInstance make_instance(const Sentence& source,
                                       const AspectInstance& target,
                                       Strategy strategy,
                                       std::string_view label, Sentence out,
                                       Polarity gold) {
  GeneratedInstance g;
  g.new_id = make_instance_id(source.sentence_id, target.aspect_id, label);
  g.source_sentence_id = source.sentence_id;
  g.target_aspect_id = target.aspect_id;
  g.strategy = strategy;
  out.sentence_id = g.new_id;
  g.sentence = std::move(out);
  g.gold_label = gold;
  return g;
}

}  // namespace perturb_detail

inline GeneratedInstance source_instance(const Sentence& s,
                                         const AspectInstance& target) {
  return perturb_detail::make_instance(s, target, {StrategyKind::kSource, 0},
                                       "source", s, target.polarity);
}

// Reverses the target's sentiment.
inline Outcome rev_tgt(const Sentence& s, const AspectInstance& target,
                       const AntonymLexicon& lex, Rng& rng) {
  if (target.polarity == Polarity::kNeutral) {
    return Skip{std::string(skip::kNeutralTarget), {}};
  }
  if (target.opinions.empty()) {
    return Skip{std::string(skip::kNoTargetOpinions), {}};
  }
  auto ts = tag_sentence(s.text, lex);
  EditPlan plan;
  try {
    plan = flip_aspect(ts, target, lex, rng);
  } catch (const NotNegatable& e) {
    return Skip{std::string(skip::kNotNegatable), e.what()};
  }
  Sentence out;
  try {
    out = perturb_detail::finish(s, ts, std::move(plan), {target.aspect_id});
  } catch (const PlanError& e) {
    return Skip{std::string(skip::kEditConflict), e.what()};
  }
  return perturb_detail::make_instance(s, target, {StrategyKind::kRevTgt, 0},
                                       "revtgt", std::move(out),
                                       reverse(target.polarity));
}

// Reverses non-targets that agree with the target and intensifies those that
// disagree, leaving the target's own sentiment intact.
inline Outcome rev_non(const Sentence& s, const AspectInstance& target,
                       const AntonymLexicon& lex,
                       const DegreeAdverbLexicon& adverbs, Rng& rng) {
  if (s.aspects.size() < 2) return Skip{std::string(skip::kSingleAspect), {}};
  if (target.opinions.empty()) {
    return Skip{std::string(skip::kNoTargetOpinions), {}};
  }
  bool any_polar = false;
  for (const auto& a : s.aspects) {
    if (a.aspect_id == target.aspect_id) continue;
    for (const auto& op : a.opinions) {
      for (const auto& top : target.opinions) {
        if (op.span.overlaps(top.span)) {
          return Skip{std::string(skip::kOverlappingOpinions), a.aspect_id};
        }
      }
    }
    any_polar = any_polar || a.polarity != Polarity::kNeutral;
  }
  if (!any_polar) return Skip{std::string(skip::kAllNeutralNonTargets), {}};

  auto ts = tag_sentence(s.text, lex);
  EditPlan plan;
  std::set<std::string> reversed;
  for (const auto& a : s.aspects) {
    if (a.aspect_id == target.aspect_id || a.polarity == Polarity::kNeutral ||
        a.opinions.empty()) {
      continue;
    }
    if (a.polarity == target.polarity) {
      EditPlan local;
      try {
        local = flip_aspect(ts, a, lex, rng);
      } catch (const NotNegatable&) {
        continue;
      }
      bool fits = std::none_of(
          local.edits().begin(), local.edits().end(),
          [&](const Edit& e) { return plan.conflicts_with(e); });
      if (!fits) continue;
      plan.merge(local);
      reversed.insert(a.aspect_id);
    } else {
      for (const auto& op : a.opinions) {
        EditPlan local;
        try {
          local = insert_adverb(ts, op.span, adverbs.sample(rng), adverbs);
        } catch (const NotExaggerable&) {
          continue;
        }
        bool fits = std::none_of(
            local.edits().begin(), local.edits().end(),
            [&](const Edit& e) { return plan.conflicts_with(e); });
        if (fits) plan.merge(local);
      }
    }
  }
  if (plan.empty()) return Skip{std::string(skip::kNothingToPerturb), {}};
  Sentence out;
  try {
    out = perturb_detail::finish(s, ts, std::move(plan), reversed);
  } catch (const PlanError& e) {
    return Skip{std::string(skip::kEditConflict), e.what()};
  }
  return perturb_detail::make_instance(s, target, {StrategyKind::kRevNon, 0},
                                       "revnon", std::move(out),
                                       target.polarity);
}

namespace perturb_detail {

inline std::vector<std::string> lower_words(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(s)) {
    if (t.is_word()) out.push_back(text::lower(t.text));
  }
  return out;
}

// Whether the words of `term` occur contiguously among `words`.
inline bool mentions(const std::vector<std::string>& words,
                     const std::vector<std::string>& term) {
  if (term.empty() || term.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), term.begin(), term.end()) !=
         words.end();
}

inline bool is_terminal(char c) {
  return c == '.' || c == '!' || c == '?' || c == ',' || c == ';' ||
         c == ':' || text::is_space(c);
}

}  // namespace perturb_detail

// Indices into `set` of the expressions AddDiff may draw for this target:
// polarity differs from the target's (any polar expression for a neutral
// target) and the aspect term is not already mentioned in the sentence.
inline std::vector<std::size_t> eligible_expressions(const Sentence& s,
                                                     Polarity target,
                                                     const AspectSet& set) {
  auto words = perturb_detail::lower_words(s.text);
  std::vector<std::size_t> out;
  const auto& pool = set.expressions();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].polarity == target) continue;
    if (perturb_detail::mentions(words,
                                 perturb_detail::lower_words(pool[i].aspect_term))) {
      continue;
    }
    out.push_back(i);
  }
  return out;
}

// Appends `k` expressions of other aspects with a polarity different from the
// target: "<body>, but e1, e2, and e3<punct>". Draws are uniform without
// replacement, one expression per aspect term, emitted in pool order.
inline GeneratedInstance add_diff(const Sentence& s,
                                  const AspectInstance& target,
                                  const AspectSet& set, int k, Rng& rng,
                                  StrategyKind kind = StrategyKind::kAddDiff,
                                  std::string_view label = "adddiff") {
  if (k < 1) throw DomainError("AddDiff needs k >= 1");
  auto eligible = eligible_expressions(s, target.polarity, set);
  const auto& pool = set.expressions();
  std::set<std::string> terms;
  for (auto i : eligible) terms.insert(text::lower(pool[i].aspect_term));
  if (terms.size() < static_cast<std::size_t>(k)) {
    throw PoolExhausted(static_cast<std::size_t>(k), terms.size());
  }
  rng.shuffle(eligible);
  std::vector<std::size_t> picked;
  std::set<std::string> used;
  for (auto i : eligible) {
    if (!used.insert(text::lower(pool[i].aspect_term)).second) continue;
    picked.push_back(i);
    if (picked.size() == static_cast<std::size_t>(k)) break;
  }
  std::sort(picked.begin(), picked.end());

  std::size_t body_end = s.text.size();
  while (body_end > 0 && perturb_detail::is_terminal(s.text[body_end - 1])) {
    --body_end;
  }
  // Opinion or term spans never reach into the stripped tail.
  for (const auto& a : s.aspects) {
    body_end = std::max(body_end, a.term_span.end);
    for (const auto& op : a.opinions) body_end = std::max(body_end, op.span.end);
  }
  std::string punct;
  for (std::size_t i = body_end; i < s.text.size(); ++i) {
    char c = s.text[i];
    if (c == '.' || c == '!' || c == '?') punct += c;
  }
  if (punct.empty()) punct = ".";

  std::string tail = ", but ";
  std::vector<AspectInstance> added;
  std::set<std::string> ids;
  for (const auto& a : s.aspects) ids.insert(a.aspect_id);
  for (std::size_t n = 0; n < picked.size(); ++n) {
    const auto& e = pool[picked[n]];
    if (n > 0) tail += n + 1 == picked.size() ? ", and " : ", ";
    const std::size_t at = body_end + tail.size();
    const std::size_t off =
        text::lower(e.expression).find(text::lower(e.aspect_term));
    tail += e.expression;
    AspectInstance inst;
    std::size_t suffix = added.size() + 1;
    do {
      inst.aspect_id = "add" + std::to_string(suffix++);
    } while (ids.count(inst.aspect_id) > 0);
    ids.insert(inst.aspect_id);
    inst.term_span = Span{at + off, at + off + e.aspect_term.size()};
    inst.polarity = e.polarity;
    added.push_back(std::move(inst));
  }
  tail += punct;

  EditPlan plan;
  plan.add({Span{body_end, s.text.size()}, tail, EditTag::kAppend});
  Sentence out = apply_to_sentence(s, plan);
  for (auto& a : added) {
    a.term = std::string(a.term_span.slice(out.text));
    out.aspects.push_back(std::move(a));
  }
  return perturb_detail::make_instance(s, target, {kind, k}, label,
                                       std::move(out), target.polarity);
}

// RevNon followed by AddDiff on its output.
inline Outcome rev_non_add_diff(const Sentence& s, const AspectInstance& target,
                                const AntonymLexicon& lex,
                                const DegreeAdverbLexicon& adverbs,
                                const AspectSet& set, int k, Rng& rng,
                                std::string_view label = "revnon_adddiff") {
  Outcome first = rev_non(s, target, lex, adverbs, rng);
  if (is_skip(first)) return first;
  const auto& g = std::get<GeneratedInstance>(first);
  Sentence mid = g.sentence;
  mid.sentence_id = s.sentence_id;
  auto out = add_diff(mid, g.target(), set, k, rng,
                      StrategyKind::kRevNonAddDiff, label);
  out.gold_label = target.polarity;
  return out;
}

}  // namespace arts

#endif  // ARTS_STRATEGIES_PERTURB_HPP_

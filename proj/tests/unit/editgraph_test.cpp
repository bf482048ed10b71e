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

#include "arts/editgraph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "arts/lexicon.hpp"
#include "support/oracles.hpp"

namespace arts {
namespace {

using namespace testing_oracles;

AntonymLexicon test_lexicon() {
  auto lex = load_tsv_lexicon(
      "tasty\tadjective\tterrible\n"
      "light\tadjective\theavy\n"
      "easy\tadjective\tdifficult\n"
      "good\tadjective\tbad\n"
      "nice\tadjective\tnasty\n"
      "reasonable\tadjective\tunreasonable\n"
      "great\tadjective\tawful\n"
      "bright\tadjective\tdim\n"
      "poor\tadjective\trich\n"
      "excellent\tadjective\tmediocre\n"
      "love\tverb\thate\n");
  for (auto v : {"change", "transport", "eat", "go", "have", "wait", "serve"}) {
    lex.add_lemma(v, PosTag::kVerb);
  }
  lex.add_exception("ate", "eat", PosTag::kVerb);
  return lex;
}

const AntonymLexicon& lex() {
  static const AntonymLexicon l = test_lexicon();
  return l;
}

Span find_span(const std::string& text, const std::string& needle) {
  auto pos = text.find(needle);
  EXPECT_NE(pos, std::string::npos) << needle;
  return Span{pos, pos + needle.size()};
}

std::string negated(const std::string& text, const std::string& opinion) {
  auto ts = tag_sentence(text, lex());
  return apply_edits(text, negate(ts, find_span(text, opinion), lex())).text;
}

// ---- apply / SpanMap --------------------------------------------------------

TEST(Apply, ReplacementExample) {
  const std::string text = "It's light and easy to transport.";
  EditPlan plan({{Span{5, 10}, "heavy", EditTag::kFlip},
                 {Span{15, 19}, "difficult", EditTag::kFlip}});
  auto out = apply_edits(text, plan);
  EXPECT_EQ(out.text, "It's heavy and difficult to transport.");
  EXPECT_EQ(out.map.map(Span{0, 4}), (Span{0, 4}));
  EXPECT_EQ(out.map.map(Span{5, 10}).slice(out.text), "heavy");
  EXPECT_EQ(out.map.map(Span{23, 32}).slice(out.text), "transport");
}

TEST(Apply, EmptyPlanIsIdentity) {
  auto out = apply_edits("anything at all", EditPlan{});
  EXPECT_EQ(out.text, "anything at all");
  EXPECT_TRUE(out.map.identity());
  EXPECT_EQ(out.map.map(Span{3, 7}), (Span{3, 7}));
}

TEST(Apply, OverlapsAreRejected) {
  EditPlan plan;
  plan.add({Span{2, 6}, "x", EditTag::kFlip});
  EXPECT_THROW(plan.add({Span{5, 8}, "y", EditTag::kFlip}), PlanError);
  EXPECT_THROW(plan.add({Span{3, 3}, "y", EditTag::kAppend}), PlanError);
  plan.add({Span{2, 2}, "z", EditTag::kAppend});
  plan.add({Span{6, 6}, "w", EditTag::kAppend});
  EXPECT_THROW(plan.add({Span{6, 6}, "v", EditTag::kAppend}), PlanError);
  EXPECT_EQ(apply_edits("0123456789", plan).text, "01zxw6789");
}

TEST(Apply, OutOfRangeEditIsAPlanError) {
  EditPlan plan;
  plan.add({Span{3, 12}, "x", EditTag::kFlip});
  EXPECT_THROW(apply_edits("short", plan), PlanError);
}

TEST(SpanMap, InsertionsAtSpanBoundaries) {
  EditPlan plan;
  plan.add({Span{4, 4}, "very ", EditTag::kAdverb});
  plan.add({Span{8, 8}, "!", EditTag::kAppend});
  auto out = apply_edits("the good", plan);
  EXPECT_EQ(out.text, "the very good!");
  EXPECT_EQ(out.map.map(Span{4, 8}).slice(out.text), "good");
  EXPECT_EQ(out.map.map(Span{0, 3}).slice(out.text), "the");
}

TEST(SpanMap, PartialOverlapIsRefused) {
  EditPlan plan;
  plan.add({Span{2, 6}, "xy", EditTag::kFlip});
  SpanMap map(plan);
  EXPECT_FALSE(map.try_map(Span{0, 4}).has_value());
  EXPECT_FALSE(map.try_map(Span{3, 5}).has_value());
  EXPECT_FALSE(map.try_map(Span{4, 4}).has_value());
  EXPECT_TRUE(map.try_map(Span{0, 8}).has_value());
  EXPECT_THROW(map.map(Span{5, 9}), PlanError);
}

TEST(ApplyProperty, MatchesNaiveRebuildAndPreservesUntouchedRegions) {
  std::mt19937_64 gen(20240607);
  for (int trial = 0; trial < 10000; ++trial) {
    auto c = random_case(gen);
    EditPlan plan(c.edits);
    auto out = apply_edits(c.text, plan);
    ASSERT_EQ(out.text, naive_apply(c.text, c.edits)) << "trial " << trial;
    for (int probe = 0; probe < 6; ++probe) {
      std::size_t a = gen() % (c.text.size() + 1);
      std::size_t b = a + gen() % (c.text.size() + 1 - a);
      Span s{a, b};
      bool disjoint = true;
      for (const auto& e : c.edits) {
        if (e.span.empty() ? (a < e.span.start && e.span.start < b)
                           : e.span.overlaps(s)) {
          disjoint = false;
        }
      }
      if (!disjoint) continue;
      auto m = out.map.try_map(s);
      ASSERT_TRUE(m.has_value());
      ASSERT_EQ(m->slice(out.text), s.slice(c.text)) << "trial " << trial;
    }
  }
}

TEST(ApplyProperty, MergedPlanEqualsSequentialApplication) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 3000; ++trial) {
    auto c = random_case(gen);
    EditPlan first, second;
    for (std::size_t i = 0; i < c.edits.size(); ++i) {
      (gen() % 2 == 0 ? first : second).add(c.edits[i]);
    }
    auto step1 = apply_edits(c.text, first);
    EditPlan second_mapped;
    bool ambiguous = false;
    for (const auto& e : second.edits()) {
      Span s = e.span.empty() ? Span{step1.map.map_start(e.span.start),
                                     step1.map.map_start(e.span.start)}
                              : step1.map.map(e.span);
      // Insertions on both sides of a deleted range collapse onto one point.
      ambiguous |= !second_mapped.try_add({s, e.replacement, e.tag});
    }
    if (ambiguous) continue;
    auto step2 = apply_edits(step1.text, second_mapped);
    ASSERT_EQ(step2.text, apply_edits(c.text, EditPlan(c.edits)).text)
        << "trial " << trial;
  }
}

TEST(ApplyToSentence, RemapsTermsAndOpinions) {
  Sentence s;
  s.sentence_id = "s";
  s.text = "Tasty burgers, and crispy fries.";
  s.aspects.push_back({"a1", "burgers", Span{6, 13}, Polarity::kPositive,
                       {{Span{0, 5}, Polarity::kPositive}}});
  s.aspects.push_back({"a2", "fries", Span{26, 31}, Polarity::kPositive,
                       {{Span{19, 25}, Polarity::kPositive}}});
  EditPlan plan;
  plan.add({Span{0, 5}, "Terrible", EditTag::kFlip});
  plan.add({Span{15, 18}, "but", EditTag::kConj});
  auto out = apply_to_sentence(s, plan);
  EXPECT_EQ(out.text, "Terrible burgers, but crispy fries.");
  EXPECT_EQ(out.aspects[0].term_span.slice(out.text), "burgers");
  EXPECT_EQ(out.aspects[0].opinions[0].span.slice(out.text), "Terrible");
  EXPECT_EQ(out.aspects[1].term_span.slice(out.text), "fries");
  EXPECT_EQ(out.aspects[1].opinions[0].span.slice(out.text), "crispy");
  EXPECT_NO_THROW(validate_sentence(out));
}

// ---- negate -----------------------------------------------------------------

TEST(Negate, WorkedAndRuleExamples) {
  EXPECT_EQ(negated("The menu changes seasonally.", "changes"),
            "The menu does not change seasonally.");
  EXPECT_EQ(negated("The screen is bright.", "bright"),
            "The screen is not bright.");
  EXPECT_EQ(negated("I loved it.", "loved"), "I did not love it.");
}

// Oracle: the do-support table keyed by the known inflection of each form.
TEST(Negate, DoSupportTable) {
  struct Row {
    const char* form;
    const char* base;
    const char* aux;
  };
  const Row rows[] = {{"loved", "love", "did"},  {"loves", "love", "does"},
                      {"love", "love", "do"},    {"went", "go", "did"},
                      {"ate", "eat", "did"},     {"has", "have", "does"},
                      {"had", "have", "did"},    {"waited", "wait", "did"},
                      {"serves", "serve", "does"}};
  for (const auto& r : rows) {
    std::string text = std::string("They ") + r.form + " it.";
    std::string expected =
        std::string("They ") + r.aux + " not " + r.base + " it.";
    EXPECT_EQ(negated(text, r.form), expected) << r.form;
  }
}

TEST(Negate, AuxiliariesCarryTheNegation) {
  EXPECT_EQ(negated("The menu has changed.", "changed"),
            "The menu has not changed.");
  EXPECT_EQ(negated("You can transport it.", "transport"),
            "You can not transport it.");
  EXPECT_EQ(negated("It was good.", "was"), "It was not good.");
}

TEST(Negate, NonVerbHeadUsesNearestVerb) {
  // "service" is a noun: the closest verb-like token is "was".
  EXPECT_EQ(negated("The service was a joke.", "joke"),
            "The service was not a joke.");
}

TEST(Negate, SentenceInitialInsertionRecasesDisplacedWord) {
  EXPECT_EQ(negated("Tasty burgers.", "Tasty"), "Not tasty burgers.");
  EXPECT_EQ(negated("Loved it.", "Loved"), "Did not love it.");
}

TEST(Negate, NothingToNegateThrows) {
  auto ts = tag_sentence("Burgers.", lex());
  EXPECT_THROW(negate(ts, Span{0, 7}, lex()), NotNegatable);
}

TEST(Negate, ChangesOnlyTheNegationWindow) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"The menu changes seasonally.", "changes"},
      {"I loved it a lot.", "loved"},
      {"The screen is bright and nice.", "bright"},
      {"Our waiter has changed twice.", "changed"}};
  for (const auto& [text, op] : cases) {
    auto ts = tag_sentence(text, lex());
    auto plan = negate(ts, find_span(text, op), lex());
    ASSERT_FALSE(plan.empty());
    std::size_t lo = plan.edits().front().span.start;
    std::size_t hi = plan.edits().back().span.end;
    auto out = apply_edits(text, plan).text;
    EXPECT_EQ(out.substr(0, lo), text.substr(0, lo));
    EXPECT_EQ(out.substr(out.size() - (text.size() - hi)), text.substr(hi));
    for (const auto& e : plan.edits()) {
      EXPECT_EQ(e.tag, EditTag::kNegate);
      if (!e.span.empty()) {
        // A replaced range is always exactly one token.
        bool one_token = false;
        for (const auto& t : ts.tokens) one_token |= t.span == e.span;
        EXPECT_TRUE(one_token || e.span.size() == 1);
      }
    }
  }
}

// ---- conjunctions -------------------------------------------------------------

std::string adjusted(const std::string& text,
                     const std::vector<std::pair<std::string, Polarity>>& ops) {
  auto ts = tag_sentence(text, lex());
  std::vector<OpinionPolarity> v;
  for (const auto& [w, p] : ops) v.push_back({find_span(text, w), p});
  return apply_edits(text, adjust_conjunctions(ts, v)).text;
}

TEST(AdjustConjunctions, Examples) {
  EXPECT_EQ(adjusted("The food is good, and the decor is nasty.",
                     {{"good", Polarity::kPositive},
                      {"nasty", Polarity::kNegative}}),
            "The food is good, but the decor is nasty.");
  EXPECT_EQ(adjusted("The food is good, and the decor is nice.",
                     {{"good", Polarity::kPositive},
                      {"nice", Polarity::kPositive}}),
            "The food is good, and the decor is nice.");
  const std::string t3 =
      "great food but an unreasonable price, and the service is poor";
  EXPECT_EQ(adjusted(t3, {{"great", Polarity::kPositive},
                          {"unreasonable", Polarity::kNegative},
                          {"poor", Polarity::kNegative}}),
            t3);
  EXPECT_EQ(adjusted("Good food but nice staff.",
                     {{"Good", Polarity::kPositive},
                      {"nice", Polarity::kPositive}}),
            "Good food and nice staff.");
}

TEST(AdjustConjunctions, NeutralOrMissingFlankIsUntouched) {
  EXPECT_EQ(adjusted("The food is good, and the decor is nasty.",
                     {{"good", Polarity::kNeutral},
                      {"nasty", Polarity::kNegative}}),
            "The food is good, and the decor is nasty.");
  EXPECT_EQ(adjusted("The food is good, and cheap.",
                     {{"good", Polarity::kPositive}}),
            "The food is good, and cheap.");
}

TEST(AdjustConjunctions, IdempotentOnRandomPolarities) {
  const std::string text =
      "good pizza and nasty wine but tasty bread yet poor service and nice "
      "staff";
  const std::vector<std::string> words = {"good", "nasty", "tasty", "poor",
                                          "nice"};
  const Polarity pols[] = {Polarity::kPositive, Polarity::kNegative,
                           Polarity::kNeutral};
  std::mt19937 gen(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<OpinionPolarity> ops;
    for (const auto& w : words) ops.push_back({find_span(text, w), pols[gen() % 3]});
    auto ts = tag_sentence(text, lex());
    auto first = apply_edits(text, adjust_conjunctions(ts, ops));
    std::vector<OpinionPolarity> moved;
    for (const auto& o : ops) moved.push_back({first.map.map(o.span), o.polarity});
    auto ts2 = tag_sentence(first.text, lex());
    EXPECT_TRUE(adjust_conjunctions(ts2, moved).empty()) << first.text;
  }
}

// ---- adverbs and articles ---------------------------------------------------

TEST(InsertAdverb, Examples) {
  DegreeAdverbLexicon adverbs;
  for (auto w : kDegreeAdverbWhitelist) adverbs.add(w);
  const std::string text = "the service is poor";
  auto ts = tag_sentence(text, lex());
  auto out = apply_edits(text, insert_adverb(ts, Span{15, 19}, "extremely", adverbs));
  EXPECT_EQ(out.text, "the service is extremely poor");

  const std::string already = "the service is very poor";
  auto ts2 = tag_sentence(already, lex());
  EXPECT_TRUE(insert_adverb(ts2, Span{20, 24}, "extremely", adverbs).empty());

  EXPECT_THROW(insert_adverb(ts, Span{4, 11}, "very", adverbs), NotExaggerable);
}

TEST(InsertAdverb, LaterAspectStillSelectsSameTerm) {
  DegreeAdverbLexicon adverbs;
  adverbs.add("very");
  const std::string text = "Good food, and the staff was nice.";
  auto ts = tag_sentence(text, lex());
  auto out = apply_edits(text, insert_adverb(ts, Span{0, 4}, "very", adverbs));
  EXPECT_EQ(out.text, "Very good food, and the staff was nice.");
  for (auto term : {"food", "staff", "nice"}) {
    Span s = find_span(text, term);
    EXPECT_EQ(out.map.map(s).slice(out.text), s.slice(text));
  }
}

TEST(FixArticles, FollowsTheNewWord) {
  const std::string text = "a reasonable price and an excellent meal";
  auto ts = tag_sentence(text, lex());
  EditPlan plan;
  plan.add({find_span(text, "reasonable"), "unreasonable", EditTag::kFlip});
  plan.add({Span{26, 26}, "very ", EditTag::kAdverb});
  fix_articles(ts, plan);
  EXPECT_EQ(apply_edits(text, plan).text,
            "an unreasonable price and a very excellent meal");
}

TEST(FixArticles, Spelling) {
  EXPECT_EQ(indefinite_article("hour"), "an");
  EXPECT_EQ(indefinite_article("unique"), "a");
  EXPECT_EQ(indefinite_article("unimpressive"), "an");
  EXPECT_EQ(indefinite_article("terrible"), "a");
  EXPECT_EQ(indefinite_article("awful"), "an");
}

}  // namespace
}  // namespace arts

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

#ifndef ARTS_ANALYTICS_STATS_HPP_
#define ARTS_ANALYTICS_STATS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arts/corpus/tokenize.hpp"
#include "arts/corpus/types.hpp"
#include "arts/strategies/types.hpp"
#include "arts/text.hpp"

namespace arts {

// Test-set characteristics. Every per-sentence average is taken over
// (sentence, target aspect) instances, so a sentence with three aspects
// counts three times.
struct DatasetStats {
  std::size_t instances = 0;
  std::size_t sentences = 0;
  double words_per_sentence = 0.0;
  std::size_t vocabulary = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;
  std::optional<double> positive_negative_ratio;  // unset without negatives
  double aspects_per_sentence = 0.0;
  double opposite_at_least_one = 0.0;  // >= 1 opposite-polarity non-target
  double opposite_all = 0.0;           // every non-target is opposite
  double opposite_per_sentence = 0.0;
};

// One instance to describe: a sentence, its target, and the target's label.
struct StatItem {
  const Sentence* sentence = nullptr;
  const AspectInstance* target = nullptr;
  Polarity label = Polarity::kNeutral;
};

namespace stats_detail {

inline bool opposite(Polarity a, Polarity b) {
  return (a == Polarity::kPositive && b == Polarity::kNegative) ||
         (a == Polarity::kNegative && b == Polarity::kPositive);
}

}  // namespace stats_detail

inline DatasetStats dataset_stats(const std::vector<StatItem>& items) {
  DatasetStats st;
  st.instances = items.size();
  std::set<const Sentence*> sentences;
  std::set<std::string> vocab;
  double words = 0.0;
  double aspects = 0.0;
  double opp_total = 0.0;
  std::size_t at_least_one = 0;
  std::size_t all = 0;
  for (const auto& it : items) {
    if (sentences.insert(it.sentence).second) {
      for (const auto& t : tokenize(it.sentence->text)) {
        if (t.is_word()) vocab.insert(text::lower(t.text));
      }
    }
    words += static_cast<double>(word_count(it.sentence->text));
    aspects += static_cast<double>(it.sentence->aspects.size());
    switch (it.label) {
      case Polarity::kPositive:
        ++st.positive;
        break;
      case Polarity::kNegative:
        ++st.negative;
        break;
      case Polarity::kNeutral:
        ++st.neutral;
        break;
    }
    std::size_t others = 0;
    std::size_t opp = 0;
    for (const auto& a : it.sentence->aspects) {
      if (&a == it.target) continue;
      ++others;
      opp += stats_detail::opposite(it.label, a.polarity);
    }
    opp_total += static_cast<double>(opp);
    at_least_one += opp > 0;
    all += others > 0 && opp == others;
  }
  st.sentences = sentences.size();
  st.vocabulary = vocab.size();
  if (st.negative > 0) {
    st.positive_negative_ratio =
        static_cast<double>(st.positive) / static_cast<double>(st.negative);
  }
  if (!items.empty()) {
    const double n = static_cast<double>(items.size());
    st.words_per_sentence = words / n;
    st.aspects_per_sentence = aspects / n;
    st.opposite_per_sentence = opp_total / n;
    st.opposite_at_least_one = static_cast<double>(at_least_one) / n;
    st.opposite_all = static_cast<double>(all) / n;
  }
  return st;
}

// Every aspect of a corpus is an instance, labeled with its own polarity.
inline DatasetStats dataset_stats(const Dataset& ds) {
  std::vector<StatItem> items;
  for (const auto& s : ds.sentences) {
    for (const auto& a : s.aspects) items.push_back({&s, &a, a.polarity});
  }
  return dataset_stats(items);
}

// Every enriched record is an instance, labeled with its gold label.
inline DatasetStats dataset_stats(const std::vector<GeneratedInstance>& instances) {
  std::vector<StatItem> items;
  for (const auto& g : instances) {
    items.push_back({&g.sentence, &g.target(), g.gold_label});
  }
  return dataset_stats(items);
}

}  // namespace arts

#endif  // ARTS_ANALYTICS_STATS_HPP_

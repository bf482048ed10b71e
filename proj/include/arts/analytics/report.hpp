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

#ifndef ARTS_ANALYTICS_REPORT_HPP_
#define ARTS_ANALYTICS_REPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arts/analytics/predictions.hpp"
#include "arts/analytics/welch.hpp"
#include "arts/errors.hpp"
#include "arts/strategies/types.hpp"

namespace arts {

// A source instance and every variation generated from it.
struct RobustnessUnit {
  LabeledId source;
  std::map<StrategyKind, std::vector<LabeledId>> variations;

  std::size_t variation_count() const {
    std::size_t n = 0;
    for (const auto& [kind, v] : variations) n += v.size();
    return n;
  }
  bool has(StrategyKind kind) const {
    auto it = variations.find(kind);
    return it != variations.end() && !it->second.empty();
  }
};

// Groups enriched instances by (source sentence, target aspect), in first
// appearance order. Every group needs exactly one source instance.
inline std::vector<RobustnessUnit> build_units(
    const std::vector<GeneratedInstance>& instances) {
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::vector<RobustnessUnit> units;
  std::vector<bool> has_source;
  for (const auto& g : instances) {
    auto key = std::make_pair(g.source_sentence_id, g.target_aspect_id);
    auto [it, fresh] = index.emplace(key, units.size());
    if (fresh) {
      units.emplace_back();
      has_source.push_back(false);
    }
    auto& u = units[it->second];
    LabeledId item{g.new_id, g.gold_label};
    if (g.strategy.kind == StrategyKind::kSource) {
      if (has_source[it->second]) {
        throw DomainError("two source instances for " + key.first + "/" +
                          key.second);
      }
      has_source[it->second] = true;
      u.source = std::move(item);
    } else {
      u.variations[g.strategy.kind].push_back(std::move(item));
    }
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!has_source[i]) {
      for (const auto& [key, idx] : index) {
        if (idx == i) {
          throw DomainError("no source instance for " + key.first + "/" +
                            key.second);
        }
      }
    }
  }
  return units;
}

namespace report_detail {

inline bool correct(const PredictionSet& preds, const LabeledId& item) {
  const Polarity* p = preds.find(item.id);
  if (p == nullptr) throw CoverageError("missing prediction for " + item.id, 1);
  return *p == item.gold;
}

inline std::vector<LabeledId> all_items(const std::vector<RobustnessUnit>& units) {
  std::vector<LabeledId> out;
  for (const auto& u : units) {
    out.push_back(u.source);
    for (const auto& [kind, v] : u.variations) {
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

// 1 iff the source (under `source_preds`) and every variation (under
// `variation_preds`) are classified correctly.
inline int unit_correct(const RobustnessUnit& u,
                        const PredictionSet& source_preds,
                        const PredictionSet& variation_preds) {
  if (!correct(source_preds, u.source)) return 0;
  for (const auto& [kind, v] : u.variations) {
    for (const auto& item : v) {
      if (!correct(variation_preds, item)) return 0;
    }
  }
  return 1;
}

}  // namespace report_detail

// Aspect Robustness Score: the fraction of units whose source and all
// variations are classified correctly.
inline double ars(const PredictionSet& source_preds,
                  const PredictionSet& variation_preds,
                  const std::vector<RobustnessUnit>& units) {
  if (units.empty()) throw DomainError("ARS over no units");
  std::vector<LabeledId> sources;
  std::vector<LabeledId> variations;
  for (const auto& u : units) {
    sources.push_back(u.source);
    for (const auto& [kind, v] : u.variations) {
      variations.insert(variations.end(), v.begin(), v.end());
    }
  }
  require_coverage(source_preds, sources);
  require_coverage(variation_preds, variations);
  std::size_t ok = 0;
  for (const auto& u : units) {
    ok += static_cast<std::size_t>(
        report_detail::unit_correct(u, source_preds, variation_preds));
  }
  return static_cast<double>(ok) / static_cast<double>(units.size());
}

inline double ars(const PredictionSet& preds,
                  const std::vector<RobustnessUnit>& units) {
  return ars(preds, preds, units);
}

inline constexpr double kSignificanceLevel = 0.05;

struct SubsetRow {
  std::string name;        // entire, revtgt, revnon, adddiff, combined
  std::size_t sources = 0;  // source instances behind the subset
  std::size_t generated = 0;
  double original = 0.0;  // accuracy on the subset's sources
  double updated = 0.0;   // accuracy on its generated instances; ARS for entire
  double change = 0.0;    // updated - original
  std::optional<double> relative_change;  // change / original
  double unit_ars = 0.0;  // ARS over the units that have this subset
  WelchResult test;
  bool significant = false;
};

struct EvalReport {
  std::string model_name;
  std::vector<SubsetRow> rows;  // entire first, then non-empty subsets
  double ars = 0.0;

  const SubsetRow* row(std::string_view name) const {
    for (const auto& r : rows) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

inline std::string_view subset_name(StrategyKind kind) {
  return kind == StrategyKind::kRevNonAddDiff ? "combined" : to_string(kind);
}

namespace report_detail {

inline void finish_row(SubsetRow& r, const std::vector<int>& before,
                       const std::vector<int>& after) {
  r.original = mean(before);
  r.updated = mean(after);
  r.change = r.updated - r.original;
  if (r.original > 0.0) r.relative_change = r.change / r.original;
  if (before.size() >= 2 && after.size() >= 2) {
    r.test = welch_t(before, after);
    r.significant = r.test.p <= kSignificanceLevel;
  }
}

}  // namespace report_detail

// Original-vs-new accuracy per strategy subset. Sources are scored with
// `original`, generated instances with `updated`; the entire-set row
// reports ARS as its new value. Significance compares the 0/1 correctness
// of a subset's sources with that of its generated instances.
inline EvalReport subset_report(const PredictionSet& original,
                                const PredictionSet& updated,
                                const std::vector<GeneratedInstance>& instances) {
  using namespace report_detail;
  auto units = build_units(instances);
  if (units.empty()) throw DomainError("no instances to evaluate");
  std::vector<LabeledId> sources;
  std::vector<LabeledId> variations;
  for (const auto& u : units) {
    sources.push_back(u.source);
    for (const auto& [kind, v] : u.variations) {
      variations.insert(variations.end(), v.begin(), v.end());
    }
  }
  require_coverage(original, sources);
  require_coverage(updated, variations);

  EvalReport rep;
  rep.model_name = updated.model_name().empty() ? original.model_name()
                                                : updated.model_name();
  std::vector<int> src_ok;
  std::vector<int> unit_ok;
  for (const auto& u : units) {
    src_ok.push_back(correct(original, u.source));
    unit_ok.push_back(unit_correct(u, original, updated));
  }
  SubsetRow entire;
  entire.name = "entire";
  entire.sources = units.size();
  entire.generated = variations.size();
  finish_row(entire, src_ok, unit_ok);
  entire.unit_ars = entire.updated;
  rep.ars = entire.updated;
  rep.rows.push_back(entire);

  for (auto kind : {StrategyKind::kRevTgt, StrategyKind::kRevNon,
                    StrategyKind::kAddDiff, StrategyKind::kRevNonAddDiff}) {
    std::vector<int> before;
    std::vector<int> after;
    std::size_t unit_hits = 0;
    for (const auto& u : units) {
      if (!u.has(kind)) continue;
      before.push_back(correct(original, u.source));
      for (const auto& item : u.variations.at(kind)) {
        after.push_back(correct(updated, item));
      }
      unit_hits += static_cast<std::size_t>(unit_correct(u, original, updated));
    }
    if (before.empty()) continue;
    SubsetRow r;
    r.name = std::string(subset_name(kind));
    r.sources = before.size();
    r.generated = after.size();
    finish_row(r, before, after);
    r.unit_ars = static_cast<double>(unit_hits) / static_cast<double>(before.size());
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

inline EvalReport subset_report(const PredictionSet& preds,
                                const std::vector<GeneratedInstance>& instances) {
  return subset_report(preds, preds, instances);
}

struct SweepPoint {
  int k = 0;
  std::size_t n = 0;
  double accuracy = 0.0;
};

// One prediction file with the enriched set it scores.
struct SweepInput {
  const PredictionSet* predictions = nullptr;
  const std::vector<GeneratedInstance>* instances = nullptr;
};

// Accuracy per AddDiff size; k = 0 is the accuracy on source instances.
// Instances shared between inputs (the same id) are counted once.
inline std::vector<SweepPoint> sweep_report(const std::vector<SweepInput>& inputs) {
  std::map<int, std::map<std::string, int>> buckets;
  for (const auto& in : inputs) {
    if (in.predictions == nullptr || in.instances == nullptr) {
      throw DomainError("sweep input without predictions or instances");
    }
    std::vector<LabeledId> items;
    std::vector<int> ks;
    for (const auto& g : *in.instances) {
      if (g.strategy.kind == StrategyKind::kSource) {
        ks.push_back(0);
      } else if (g.strategy.kind == StrategyKind::kAddDiff) {
        ks.push_back(g.strategy.k);
      } else {
        continue;
      }
      items.push_back({g.new_id, g.gold_label});
    }
    auto ok = correctness(*in.predictions, items);
    for (std::size_t i = 0; i < items.size(); ++i) {
      buckets[ks[i]].emplace(items[i].id, ok[i]);
    }
  }
  std::vector<SweepPoint> out;
  for (const auto& [k, ids] : buckets) {
    std::size_t hits = 0;
    for (const auto& [id, ok] : ids) hits += static_cast<std::size_t>(ok);
    out.push_back({k, ids.size(),
                   static_cast<double>(hits) / static_cast<double>(ids.size())});
  }
  return out;
}

inline std::vector<SweepPoint> sweep_report(
    const PredictionSet& preds, const std::vector<GeneratedInstance>& instances) {
  return sweep_report({SweepInput{&preds, &instances}});
}

}  // namespace arts

#endif  // ARTS_ANALYTICS_REPORT_HPP_

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

#ifndef ARTS_ANALYTICS_PREDICTIONS_HPP_
#define ARTS_ANALYTICS_PREDICTIONS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"
#include "arts/strategies/types.hpp"
#include "arts/text.hpp"

namespace arts {

// Predicted polarity per instance id, for one model on one test set.
class PredictionSet {
 public:
  PredictionSet() = default;
  explicit PredictionSet(std::string model_name)
      : model_name_(std::move(model_name)) {}

  const std::string& model_name() const { return model_name_; }
  void set_model_name(std::string name) { model_name_ = std::move(name); }

  // Returns false when the id already has a prediction.
  bool add(std::string id, Polarity p) {
    return labels_.emplace(std::move(id), p).second;
  }
  const Polarity* find(std::string_view id) const {
    auto it = labels_.find(std::string(id));
    return it == labels_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return labels_.size(); }

 private:
  std::string model_name_;
  std::unordered_map<std::string, Polarity> labels_;
};

// TSV "instance_id<TAB>predicted_label". An optional first line naming the
// columns is skipped; duplicate ids are rejected.
inline PredictionSet parse_predictions(std::string_view input,
                                       std::string model_name = {}) {
  PredictionSet out(std::move(model_name));
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2) {
      throw SchemaError(line_no, "expected instance_id<TAB>predicted_label");
    }
    if (cols[0] == "instance_id") continue;
    auto pol = parse_polarity(text::trim(cols[1]));
    if (!pol) {
      throw SchemaError(line_no, "invalid label \"" + cols[1] + "\"");
    }
    if (!out.add(cols[0], *pol)) {
      throw SchemaError(line_no, "duplicate prediction for " + cols[0]);
    }
  }
  return out;
}

inline std::string serialize_predictions(
    const std::vector<std::pair<std::string, Polarity>>& rows) {
  std::string out = "instance_id\tpredicted_label\n";
  for (const auto& [id, p] : rows) {
    out += id + '\t' + std::string(to_string(p)) + '\n';
  }
  return out;
}

// An instance id with its gold label.
struct LabeledId {
  std::string id;
  Polarity gold = Polarity::kNeutral;

  friend bool operator==(const LabeledId&, const LabeledId&) = default;
};

inline std::vector<LabeledId> labeled_ids(
    const std::vector<GeneratedInstance>& instances) {
  std::vector<LabeledId> out;
  out.reserve(instances.size());
  for (const auto& g : instances) out.push_back({g.new_id, g.gold_label});
  return out;
}

// Throws CoverageError naming the number of ids without a prediction and the
// first five of them.
inline void require_coverage(const PredictionSet& preds,
                             const std::vector<LabeledId>& items) {
  std::vector<std::string> missing;
  for (const auto& it : items) {
    if (preds.find(it.id) == nullptr) missing.push_back(it.id);
  }
  if (missing.empty()) return;
  std::string msg = std::to_string(missing.size()) + " id(s) lack predictions";
  if (!preds.model_name().empty()) msg += " in " + preds.model_name();
  msg += ":";
  for (std::size_t i = 0; i < missing.size() && i < 5; ++i) {
    msg += ' ' + missing[i];
  }
  if (missing.size() > 5) msg += " ...";
  throw CoverageError(msg, missing.size());
}

// 0/1 correctness per item, in item order.
inline std::vector<int> correctness(const PredictionSet& preds,
                                    const std::vector<LabeledId>& items) {
  require_coverage(preds, items);
  std::vector<int> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(*preds.find(it.id) == it.gold);
  return out;
}

inline double mean(const std::vector<int>& v) {
  if (v.empty()) throw DomainError("mean of an empty sample");
  std::size_t s = 0;
  for (int x : v) s += static_cast<std::size_t>(x);
  return static_cast<double>(s) / static_cast<double>(v.size());
}

// Fraction of items whose prediction equals the gold label.
inline double accuracy(const PredictionSet& preds,
                       const std::vector<LabeledId>& items) {
  if (items.empty()) throw DomainError("accuracy over no instances");
  return mean(correctness(preds, items));
}

inline double accuracy(const PredictionSet& preds,
                       const std::vector<GeneratedInstance>& instances) {
  return accuracy(preds, labeled_ids(instances));
}

}  // namespace arts

#endif  // ARTS_ANALYTICS_PREDICTIONS_HPP_

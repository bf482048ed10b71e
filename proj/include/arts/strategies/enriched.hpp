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

#ifndef ARTS_STRATEGIES_ENRICHED_HPP_
#define ARTS_STRATEGIES_ENRICHED_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/jsonl.hpp"
#include "arts/errors.hpp"
#include "arts/strategies/types.hpp"

namespace arts {

// Enriched JSONL record: the corpus sentence schema plus source_id,
// target_aspect_id, strategy, k (null outside AddDiff) and gold_label.
inline jsonl_detail::Json instance_to_json(const GeneratedInstance& g) {
  auto j = sentence_to_json(g.sentence);
  j["id"] = g.new_id;
  j["source_id"] = g.source_sentence_id;
  j["target_aspect_id"] = g.target_aspect_id;
  j["strategy"] = std::string(to_string(g.strategy.kind));
  if (uses_k(g.strategy.kind)) {
    j["k"] = g.strategy.k;
  } else {
    j["k"] = nullptr;
  }
  j["gold_label"] = std::string(to_string(g.gold_label));
  return j;
}

inline std::string serialize_enriched(
    const std::vector<GeneratedInstance>& instances) {
  std::string out;
  for (const auto& g : instances) {
    out += instance_to_json(g).dump();
    out += '\n';
  }
  return out;
}

inline std::vector<GeneratedInstance> parse_enriched(std::string_view input) {
  using jsonl_detail::Json;
  std::vector<GeneratedInstance> out;
  for_each_jsonl(input, [&](std::size_t line, const Json& obj) {
    std::vector<ConflictRecord> conflicts;
    GeneratedInstance g;
    g.sentence = sentence_from_json(obj, line, conflicts);
    g.new_id = g.sentence.sentence_id;
    g.source_sentence_id = jsonl_detail::require_string(obj, "source_id", line);
    g.target_aspect_id =
        jsonl_detail::require_string(obj, "target_aspect_id", line);
    auto raw = jsonl_detail::require_string(obj, "strategy", line);
    auto kind = parse_strategy(raw);
    if (!kind) throw SchemaError(line, "unknown strategy \"" + raw + "\"");
    g.strategy.kind = *kind;
    const Json& k = jsonl_detail::require(obj, "k", line, {});
    if (uses_k(*kind)) {
      if (!k.is_number_integer() || k.get<long long>() < 1) {
        throw SchemaError(line, "field \"k\" must be a positive integer");
      }
      g.strategy.k = k.get<int>();
    } else if (!k.is_null()) {
      throw SchemaError(line, "field \"k\" must be null for " + raw);
    }
    auto gold = jsonl_detail::require_string(obj, "gold_label", line);
    auto pol = parse_polarity(gold);
    if (!pol) throw SchemaError(line, "invalid gold_label \"" + gold + "\"");
    g.gold_label = *pol;
    if (g.sentence.find_aspect(g.target_aspect_id) == nullptr) {
      throw SchemaError(line, "target aspect \"" + g.target_aspect_id +
                                  "\" not among the record's aspects");
    }
    out.push_back(std::move(g));
  });
  return out;
}

}  // namespace arts

#endif  // ARTS_STRATEGIES_ENRICHED_HPP_

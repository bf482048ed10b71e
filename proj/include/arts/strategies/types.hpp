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

#ifndef ARTS_STRATEGIES_TYPES_HPP_
#define ARTS_STRATEGIES_TYPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"

namespace arts {

enum class StrategyKind { kSource, kRevTgt, kRevNon, kAddDiff, kRevNonAddDiff };

inline std::string_view to_string(StrategyKind s) {
  switch (s) {
    case StrategyKind::kSource:
      return "source";
    case StrategyKind::kRevTgt:
      return "revtgt";
    case StrategyKind::kRevNon:
      return "revnon";
    case StrategyKind::kAddDiff:
      return "adddiff";
    case StrategyKind::kRevNonAddDiff:
      return "revnon_adddiff";
  }
  return "source";
}

inline std::optional<StrategyKind> parse_strategy(std::string_view s) {
  for (auto k : {StrategyKind::kSource, StrategyKind::kRevTgt,
                 StrategyKind::kRevNon, StrategyKind::kAddDiff,
                 StrategyKind::kRevNonAddDiff}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

inline bool uses_k(StrategyKind s) {
  return s == StrategyKind::kAddDiff || s == StrategyKind::kRevNonAddDiff;
}

// A strategy plus its AddDiff size where one applies (0 otherwise).
struct Strategy {
  StrategyKind kind = StrategyKind::kSource;
  int k = 0;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// Skip reasons, as written to the skip report.
namespace skip {
inline constexpr std::string_view kNeutralTarget = "neutral_target";
inline constexpr std::string_view kNoTargetOpinions = "no_target_opinions";
inline constexpr std::string_view kNotNegatable = "not_negatable";
inline constexpr std::string_view kSingleAspect = "single_aspect";
inline constexpr std::string_view kOverlappingOpinions = "overlapping_opinions";
inline constexpr std::string_view kAllNeutralNonTargets =
    "all_neutral_nontargets";
inline constexpr std::string_view kNothingToPerturb = "nothing_to_perturb";
inline constexpr std::string_view kPoolExhausted = "pool_exhausted";
inline constexpr std::string_view kEditConflict = "edit_conflict";
}  // namespace skip

struct Skip {
  std::string reason;
  std::string detail;
};

struct GeneratedInstance {
  std::string new_id;
  std::string source_sentence_id;
  std::string target_aspect_id;
  Strategy strategy;
  Sentence sentence;  // sentence_id == new_id; spans valid in the new text
  Polarity gold_label = Polarity::kNeutral;

  const AspectInstance& target() const {
    const auto* a = sentence.find_aspect(target_aspect_id);
    if (a == nullptr) throw DomainError("target aspect missing from " + new_id);
    return *a;
  }
};

using Outcome = std::variant<GeneratedInstance, Skip>;

inline bool is_skip(const Outcome& o) { return std::holds_alternative<Skip>(o); }

// "sid#aid#strategy"; a swept AddDiff size is spelled "adddiff-k3".
inline std::string make_instance_id(std::string_view sentence_id,
                                    std::string_view aspect_id,
                                    std::string_view strategy_label) {
  std::string out(sentence_id);
  out += '#';
  out += aspect_id;
  out += '#';
  out += strategy_label;
  return out;
}

inline Polarity reverse(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return Polarity::kNegative;
    case Polarity::kNegative:
      return Polarity::kPositive;
    case Polarity::kNeutral:
      break;
  }
  throw NotReversible("neutral polarity has no reverse");
}

}  // namespace arts

#endif  // ARTS_STRATEGIES_TYPES_HPP_

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

#ifndef ARTS_LEXICON_SELECT_HPP_
#define ARTS_LEXICON_SELECT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/rng.hpp"

namespace arts {

// Picks one antonym. Candidates seen in the vocabulary are preferred; the
// choice among the survivors is uniform. Consumes exactly one draw whenever
// there is more than one survivor.
template <typename Vocabulary>
std::optional<std::string> select_antonym(
    const std::vector<std::string>& candidates, PosTag /*original_pos*/,
    const Vocabulary& vocabulary, Rng& rng) {
  if (candidates.empty()) return std::nullopt;
  std::vector<const std::string*> pool;
  for (const auto& c : candidates) {
    if (vocabulary.count(c) > 0) pool.push_back(&c);
  }
  if (pool.empty()) {
    for (const auto& c : candidates) pool.push_back(&c);
  }
  if (pool.size() == 1) return *pool.front();
  return *pool[rng.uniform(pool.size())];
}

}  // namespace arts

#endif  // ARTS_LEXICON_SELECT_HPP_

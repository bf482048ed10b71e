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

#ifndef ARTS_CORPUS_FILTER_HPP_
#define ARTS_CORPUS_FILTER_HPP_

#include <set>
#include <string>

#include "arts/corpus/types.hpp"

namespace arts {

struct ConflictRemoval {
  std::size_t aspects = 0;
  std::size_t sentences = 0;

  std::size_t total() const { return aspects + sentences; }
};

// Drops conflict-labelled aspects, then any sentence that is left without
// aspects because of that. Sentences that never had aspects are kept.
inline std::pair<Dataset, ConflictRemoval> filter_conflicts(Dataset ds) {
  ConflictRemoval removed;
  std::set<std::string> touched;
  for (const auto& c : ds.conflicts) touched.insert(c.sentence_id);
  removed.aspects = ds.conflicts.size();
  ds.conflicts.clear();
  std::erase_if(ds.sentences, [&](const Sentence& s) {
    bool drop = s.aspects.empty() && touched.count(s.sentence_id) > 0;
    if (drop) ++removed.sentences;
    return drop;
  });
  return {std::move(ds), removed};
}

}  // namespace arts

#endif  // ARTS_CORPUS_FILTER_HPP_

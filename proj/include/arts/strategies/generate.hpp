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

#ifndef ARTS_STRATEGIES_GENERATE_HPP_
#define ARTS_STRATEGIES_GENERATE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"
#include "arts/lexicon.hpp"
#include "arts/rng.hpp"
#include "arts/strategies/aspect_set.hpp"
#include "arts/strategies/perturb.hpp"
#include "arts/strategies/types.hpp"

namespace arts {

struct KPolicy {
  // Fixed size when set; otherwise uniform over {1, 2, 3}.
  std::optional<int> fixed;

  static KPolicy uniform() { return {}; }
  static KPolicy exactly(int k) { return {k}; }
};

struct GenerationConfig {
  std::uint64_t seed = 0;
  std::vector<StrategyKind> strategies = {
      StrategyKind::kRevTgt, StrategyKind::kRevNon, StrategyKind::kAddDiff};
  KPolicy k_policy;
  unsigned threads = 1;
  // Suffix AddDiff ids with the size ("adddiff-k3"), for sweeps.
  bool label_k = false;
};

struct GenerationResources {
  const AntonymLexicon* lexicon = nullptr;
  const DegreeAdverbLexicon* adverbs = nullptr;
  const AspectSet* aspect_set = nullptr;
};

struct SkipRecord {
  std::string sentence_id;
  std::string aspect_id;
  std::string strategy;
  std::string reason;
  std::string detail;
};

class SkipReport {
 public:
  void add(SkipRecord r) {
    ++counts_[{r.strategy, r.reason}];
    records_.push_back(std::move(r));
  }

  const std::vector<SkipRecord>& records() const { return records_; }
  const std::map<std::pair<std::string, std::string>, std::size_t>& counts()
      const {
    return counts_;
  }
  std::size_t count(const std::string& strategy) const {
    std::size_t n = 0;
    for (const auto& [key, c] : counts_) {
      if (key.first == strategy) n += c;
    }
    return n;
  }
  bool empty() const { return records_.empty(); }

  // "strategy<TAB>reason<TAB>count", sorted by strategy then reason.
  std::string to_tsv() const {
    std::string out = "strategy\treason\tcount\n";
    for (const auto& [key, c] : counts_) {
      out += key.first + '\t' + key.second + '\t' + std::to_string(c) + '\n';
    }
    return out;
  }

 private:
  std::vector<SkipRecord> records_;
  std::map<std::pair<std::string, std::string>, std::size_t> counts_;
};

struct GenerationResult {
  std::vector<GeneratedInstance> instances;
  SkipReport skips;

  std::size_t count(StrategyKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(),
                      [kind](const auto& g) { return g.strategy.kind == kind; }));
  }
};

namespace generate_detail {

inline std::string label_for(StrategyKind kind, const GenerationConfig& cfg,
                             int k) {
  std::string label(to_string(kind));
  if (cfg.label_k && uses_k(kind)) label += "-k" + std::to_string(k);
  return label;
}

struct SentenceOutput {
  std::vector<GeneratedInstance> instances;
  std::vector<SkipRecord> skips;
};

// Runs AddDiff-style generation with the policy's k. Under the uniform
// policy an exhausted pool lowers k until it fits.
template <typename Fn>
Outcome with_k(const GenerationConfig& cfg, Rng& rng, Fn&& run) {
  int k = cfg.k_policy.fixed ? *cfg.k_policy.fixed
                             : 1 + static_cast<int>(rng.uniform(3));
  while (true) {
    try {
      return run(k);
    } catch (const PoolExhausted& e) {
      if (cfg.k_policy.fixed || k <= 1 || e.available() == 0) {
        return Skip{std::string(skip::kPoolExhausted), e.what()};
      }
      k = static_cast<int>(std::min<std::size_t>(e.available(), k - 1));
    }
  }
}

inline SentenceOutput process_sentence(const Sentence& s,
                                       const GenerationConfig& cfg,
                                       const GenerationResources& res) {
  SentenceOutput out;
  for (const auto& target : s.aspects) {
    out.instances.push_back(source_instance(s, target));
    for (auto kind : cfg.strategies) {
      if (kind == StrategyKind::kSource) continue;
      const std::string base(to_string(kind));
      Rng rng(derive_seed(cfg.seed, {s.sentence_id, target.aspect_id, base}));
      Outcome o;
      switch (kind) {
        case StrategyKind::kRevTgt:
          o = rev_tgt(s, target, *res.lexicon, rng);
          break;
        case StrategyKind::kRevNon:
          o = rev_non(s, target, *res.lexicon, *res.adverbs, rng);
          break;
        case StrategyKind::kAddDiff:
          o = with_k(cfg, rng, [&](int k) -> Outcome {
            return add_diff(s, target, *res.aspect_set, k, rng,
                            StrategyKind::kAddDiff, label_for(kind, cfg, k));
          });
          break;
        case StrategyKind::kRevNonAddDiff:
          o = with_k(cfg, rng, [&](int k) -> Outcome {
            Rng attempt = rng;
            return rev_non_add_diff(s, target, *res.lexicon, *res.adverbs,
                                    *res.aspect_set, k, attempt,
                                    label_for(kind, cfg, k));
          });
          break;
        case StrategyKind::kSource:
          break;
      }
      if (auto* skip = std::get_if<Skip>(&o)) {
        out.skips.push_back({s.sentence_id, target.aspect_id,
                             label_for(kind, cfg, cfg.k_policy.fixed.value_or(0)),
                             skip->reason, skip->detail});
      } else {
        out.instances.push_back(std::get<GeneratedInstance>(std::move(o)));
      }
    }
  }
  return out;
}

}  // namespace generate_detail

// Source instances plus every applicable strategy output for every (sentence,
// target) pair, in dataset order. Each unit of work draws from its own
// seed-derived stream, so results do not depend on `threads`.
inline GenerationResult generate_all(const Dataset& ds,
                                     const GenerationConfig& cfg,
                                     const GenerationResources& res) {
  for (auto kind : cfg.strategies) {
    if (kind != StrategyKind::kSource && res.lexicon == nullptr) {
      throw ConfigError("an antonym lexicon is required");
    }
    if ((kind == StrategyKind::kRevNon || kind == StrategyKind::kRevNonAddDiff) &&
        (res.adverbs == nullptr || res.adverbs->empty())) {
      throw ConfigError("RevNon needs a non-empty degree-adverb lexicon");
    }
    if (uses_k(kind) && res.aspect_set == nullptr) {
      throw ConfigError("AddDiff needs an aspect expression set");
    }
  }
  if (cfg.k_policy.fixed && *cfg.k_policy.fixed < 1) {
    throw ConfigError("k must be at least 1");
  }

  const std::size_t n = ds.sentences.size();
  std::vector<generate_detail::SentenceOutput> parts(n);
  const unsigned threads =
      std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        parts[i] = generate_detail::process_sentence(ds.sentences[i], cfg, res);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  GenerationResult out;
  for (auto& p : parts) {
    for (auto& g : p.instances) out.instances.push_back(std::move(g));
    for (auto& s : p.skips) out.skips.add(std::move(s));
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_STRATEGIES_GENERATE_HPP_

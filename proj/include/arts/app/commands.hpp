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

#ifndef ARTS_APP_COMMANDS_HPP_
#define ARTS_APP_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arts/analytics.hpp"
#include "arts/app/manifest.hpp"
#include "arts/app/review.hpp"
#include "arts/corpus.hpp"
#include "arts/errors.hpp"
#include "arts/io.hpp"
#include "arts/lexicon.hpp"
#include "arts/strategies.hpp"

namespace arts::app {

namespace fs = std::filesystem;

inline constexpr int kMaxFixedK = 16;

// Corpus input: a SemEval XML or JSONL file plus an optional opinion TSV.
struct CorpusInput {
  fs::path path;
  std::optional<CorpusFormat> format;
  std::optional<fs::path> opinions;
};

inline Dataset load_corpus(const CorpusInput& in, Split split) {
  Dataset ds = load_dataset(in.path, in.format, in.path.stem().string(), split);
  if (in.opinions) ds = attach_opinions(std::move(ds), io::read_file(*in.opinions));
  return ds;
}

struct GenerateOptions {
  CorpusInput input;
  std::optional<CorpusInput> train;  // vocabulary, adverb mining, AspectSet
  std::optional<fs::path> wordnet;
  std::optional<fs::path> antonyms_tsv;
  std::optional<fs::path> adverbs;     // overrides mining
  std::optional<fs::path> aspect_set;  // overrides the built pool
  std::uint64_t seed = 0;
  std::vector<StrategyKind> strategies = {
      StrategyKind::kRevTgt, StrategyKind::kRevNon, StrategyKind::kAddDiff};
  std::optional<int> k;  // fixed AddDiff size; uniform over 1..3 when unset
  std::vector<int> sweep_ks;  // when non-empty: AddDiff once per k
  unsigned threads = 1;
  fs::path out_dir = ".";
};

inline std::vector<StrategyKind> parse_strategy_list(std::string_view list) {
  std::vector<StrategyKind> out;
  for (const auto& raw : text::split(list, ',')) {
    const std::string name = text::lower(text::trim(raw));
    if (name.empty()) continue;
    if (name == "all") {
      for (auto k : {StrategyKind::kRevTgt, StrategyKind::kRevNon,
                     StrategyKind::kAddDiff, StrategyKind::kRevNonAddDiff}) {
        out.push_back(k);
      }
      continue;
    }
    auto kind = parse_strategy(name);
    if (!kind || *kind == StrategyKind::kSource) {
      throw ConfigError("unknown strategy \"" + name + "\"");
    }
    out.push_back(*kind);
  }
  if (out.empty()) throw ConfigError("no strategies selected");
  return out;
}

inline std::string strategy_list(const std::vector<StrategyKind>& kinds) {
  std::string out;
  for (auto k : kinds) {
    if (!out.empty()) out += ',';
    out += to_string(k);
  }
  return out;
}

namespace commands_detail {

inline Json path_or_null(const std::optional<fs::path>& p) {
  return p ? Json(p->string()) : Json(nullptr);
}

inline Json corpus_json(const CorpusInput& c) {
  Json j;
  j["path"] = c.path.string();
  j["format"] = c.format ? Json(c.format == CorpusFormat::kXml ? "xml" : "jsonl")
                         : Json(nullptr);
  j["opinions"] = path_or_null(c.opinions);
  return j;
}

inline std::optional<CorpusInput> corpus_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  CorpusInput c;
  c.path = j.at("path").get<std::string>();
  if (!j.at("format").is_null()) {
    c.format = parse_format(j.at("format").get<std::string>());
  }
  if (!j.at("opinions").is_null()) c.opinions = j.at("opinions").get<std::string>();
  return c;
}

inline std::optional<fs::path> opt_path(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return fs::path(j.at(key).get<std::string>());
}

}  // namespace commands_detail

inline Json generate_config_json(const GenerateOptions& o) {
  using namespace commands_detail;
  Json j;
  j["input"] = corpus_json(o.input);
  j["train"] = o.train ? corpus_json(*o.train) : Json(nullptr);
  j["wordnet"] = path_or_null(o.wordnet);
  j["antonyms_tsv"] = path_or_null(o.antonyms_tsv);
  j["adverbs"] = path_or_null(o.adverbs);
  j["aspect_set"] = path_or_null(o.aspect_set);
  j["seed"] = o.seed;
  j["strategies"] = strategy_list(o.strategies);
  j["k"] = o.k ? Json(*o.k) : Json("uniform_1_3");
  j["sweep_ks"] = o.sweep_ks;
  return j;
}

// Rebuilds options from a manifest's config; thread count and output
// directory are not part of the configuration.
inline GenerateOptions generate_options_from_json(const Json& j) {
  using namespace commands_detail;
  GenerateOptions o;
  try {
    o.input = *corpus_from_json(j.at("input"));
    o.train = corpus_from_json(j.at("train"));
    o.wordnet = opt_path(j, "wordnet");
    o.antonyms_tsv = opt_path(j, "antonyms_tsv");
    o.adverbs = opt_path(j, "adverbs");
    o.aspect_set = opt_path(j, "aspect_set");
    o.seed = j.at("seed").get<std::uint64_t>();
    o.strategies = parse_strategy_list(j.at("strategies").get<std::string>());
    if (j.at("k").is_number_integer()) o.k = j.at("k").get<int>();
    o.sweep_ks = j.at("sweep_ks").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed generate config: ") + e.what());
  }
  return o;
}

struct GenerateOutcome {
  GenerationResult result;
  AspectSet aspect_set;
  Manifest manifest;
  std::vector<fs::path> written;
};

inline constexpr const char* kEnrichedFile = "enriched.jsonl";
inline constexpr const char* kSkipsFile = "skips.tsv";
inline constexpr const char* kAspectSetFile = "aspect_set.tsv";
inline constexpr const char* kManifestFile = "manifest.json";

// Loads every input, generates, and writes the enriched JSONL, skip report,
// AspectSet and manifest into `out_dir`.
inline GenerateOutcome cmd_generate(const GenerateOptions& o) {
  if (o.wordnet.has_value() == o.antonyms_tsv.has_value()) {
    throw ConfigError("give exactly one of --wordnet and --antonyms-tsv");
  }
  if (o.k && (*o.k < 1 || *o.k > kMaxFixedK)) {
    throw ConfigError("--k must be between 1 and " + std::to_string(kMaxFixedK));
  }
  for (int k : o.sweep_ks) {
    if (k < 1 || k > kMaxFixedK) {
      throw ConfigError("sweep sizes must be between 1 and " +
                        std::to_string(kMaxFixedK));
    }
  }

  Manifest m;
  m.command = o.sweep_ks.empty() ? "generate" : "sweep";
  m.seed = o.seed;
  m.config = generate_config_json(o);
  auto digest = [&](const std::string& role, const fs::path& p) {
    m.inputs[role] = sha256_file(p);
  };

  Dataset test = load_corpus(o.input, Split::kTest);
  digest("input", o.input.path);
  if (o.input.opinions) digest("opinions", *o.input.opinions);
  std::optional<Dataset> train;
  if (o.train) {
    train = load_corpus(*o.train, Split::kTrain);
    digest("train", o.train->path);
    if (o.train->opinions) digest("train_opinions", *o.train->opinions);
  }

  AntonymLexicon lex;
  if (o.wordnet) {
    lex = load_wordnet(*o.wordnet);
    for (const char* f : {"data.adj", "data.verb", "data.noun", "data.adv"}) {
      if (fs::exists(*o.wordnet / f)) digest(std::string("wordnet/") + f, *o.wordnet / f);
    }
  } else {
    lex = load_tsv_lexicon(io::read_file(*o.antonyms_tsv));
    digest("antonyms_tsv", *o.antonyms_tsv);
  }
  if (train) lex.add_vocabulary(*train);

  DegreeAdverbLexicon adverbs;
  if (o.adverbs) {
    adverbs = parse_degree_adverbs(io::read_file(*o.adverbs));
    digest("adverbs", *o.adverbs);
  } else {
    adverbs = build_degree_adverbs(train ? *train : Dataset{}, lex);
  }

  AspectSet pool;
  if (o.aspect_set) {
    pool = parse_aspect_set(io::read_file(*o.aspect_set));
    digest("aspect_set", *o.aspect_set);
  } else {
    Dataset all = test;
    if (train) {
      all.sentences.insert(all.sentences.end(), train->sentences.begin(),
                           train->sentences.end());
    }
    bool needs_pool = !o.sweep_ks.empty();
    for (auto k : o.strategies) needs_pool = needs_pool || uses_k(k);
    if (needs_pool) pool = build_aspect_set(all, lex);
  }

  GenerationResources res{&lex, &adverbs, &pool};
  GenerateOutcome out;
  if (o.sweep_ks.empty()) {
    GenerationConfig cfg;
    cfg.seed = o.seed;
    cfg.strategies = o.strategies;
    if (o.k) cfg.k_policy = KPolicy::exactly(*o.k);
    cfg.threads = o.threads;
    out.result = generate_all(test, cfg, res);
  } else {
    // Sources once, then AddDiff for each size with size-labeled ids.
    bool first = true;
    for (int k : o.sweep_ks) {
      GenerationConfig cfg;
      cfg.seed = o.seed;
      cfg.strategies = {StrategyKind::kAddDiff};
      cfg.k_policy = KPolicy::exactly(k);
      cfg.label_k = true;
      cfg.threads = o.threads;
      auto part = generate_all(test, cfg, res);
      for (auto& g : part.instances) {
        if (g.strategy.kind == StrategyKind::kSource && !first) continue;
        out.result.instances.push_back(std::move(g));
      }
      for (const auto& r : part.skips.records()) out.result.skips.add(r);
      first = false;
    }
  }
  out.aspect_set = std::move(pool);

  fs::create_directories(o.out_dir);
  auto write = [&](const char* name, const std::string& content) {
    io::write_file_atomic(o.out_dir / name, content);
    m.outputs[name] = sha256_hex(content);
    out.written.push_back(o.out_dir / name);
  };
  write(kEnrichedFile, serialize_enriched(out.result.instances));
  write(kSkipsFile, out.result.skips.to_tsv());
  write(kAspectSetFile, serialize_aspect_set(out.aspect_set));
  io::write_file_atomic(o.out_dir / kManifestFile, m.to_json().dump(2) + '\n');
  out.written.push_back(o.out_dir / kManifestFile);
  out.manifest = std::move(m);
  return out;
}

// Re-runs a recorded generation after checking that every input still has
// its recorded digest.
inline GenerateOutcome cmd_replay(const fs::path& manifest_path,
                                  const fs::path& out_dir, unsigned threads) {
  Manifest m = load_manifest(manifest_path);
  GenerateOptions o = generate_options_from_json(m.config);
  o.out_dir = out_dir;
  o.threads = threads;
  auto out = cmd_generate(o);
  for (const auto& [role, sha] : m.inputs) {
    auto it = out.manifest.inputs.find(role);
    if (it == out.manifest.inputs.end() || it->second != sha) {
      throw ValidationError("input \"" + role + "\" differs from the manifest");
    }
  }
  return out;
}

inline std::string generate_summary(const GenerateOutcome& g) {
  std::string out;
  for (auto kind : {StrategyKind::kSource, StrategyKind::kRevTgt,
                    StrategyKind::kRevNon, StrategyKind::kAddDiff,
                    StrategyKind::kRevNonAddDiff}) {
    const std::size_t n = g.result.count(kind);
    if (n == 0 && kind != StrategyKind::kSource) continue;
    out += std::string(to_string(kind)) + '\t' + std::to_string(n) + '\n';
  }
  out += "total\t" + std::to_string(g.result.instances.size()) + '\n';
  return out;
}

// ---- stats ----

struct StatsOptions {
  std::optional<CorpusInput> input;
  std::optional<fs::path> enriched;
  bool json = false;
};

inline std::string cmd_stats(const StatsOptions& o) {
  if (!o.input && !o.enriched) {
    throw ConfigError("stats needs --input and/or --enriched");
  }
  StatsColumns cols;
  std::optional<Dataset> ds;
  std::vector<GeneratedInstance> enriched;
  if (o.input) {
    ds = load_corpus(*o.input, Split::kTest);
    cols.push_back({"Ori", dataset_stats(*ds)});
  }
  if (o.enriched) {
    enriched = parse_enriched(io::read_file(*o.enriched));
    cols.push_back({"ARTS", dataset_stats(enriched)});
  }
  return o.json ? stats_json(cols) : stats_text(cols);
}

// ---- evaluate ----

enum class ReportFormat { kText, kJson, kCsv };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::kText;
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

struct EvaluateOptions {
  fs::path gold;
  std::vector<fs::path> predictions;
  // Optional per-model predictions for the source instances, paired with
  // `predictions` by position.
  std::vector<fs::path> original_predictions;
  ReportFormat format = ReportFormat::kText;
};

inline PredictionSet load_predictions(const fs::path& p) {
  return parse_predictions(io::read_file(p), p.stem().string());
}

inline std::vector<EvalReport> evaluate_reports(const EvaluateOptions& o) {
  if (o.predictions.empty()) throw ConfigError("no prediction files given");
  if (!o.original_predictions.empty() &&
      o.original_predictions.size() != o.predictions.size()) {
    throw ConfigError("original predictions must pair with prediction files");
  }
  auto gold = parse_enriched(io::read_file(o.gold));
  std::vector<EvalReport> reports;
  for (std::size_t i = 0; i < o.predictions.size(); ++i) {
    auto updated = load_predictions(o.predictions[i]);
    auto original = o.original_predictions.empty()
                        ? updated
                        : load_predictions(o.original_predictions[i]);
    auto rep = subset_report(original, updated, gold);
    rep.model_name = updated.model_name();
    reports.push_back(std::move(rep));
  }
  return sorted_reports(std::move(reports));
}

inline std::string cmd_evaluate(const EvaluateOptions& o) {
  auto reports = evaluate_reports(o);
  if (o.format == ReportFormat::kJson) return reports_json(reports);
  if (o.format == ReportFormat::kCsv) {
    std::string out =
        "model,subset,sources,generated,original,new,change,p,significant\n";
    for (const auto& r : reports) {
      for (const auto& row : r.rows) {
        out += r.model_name + ',' + row.name + ',' + std::to_string(row.sources) +
               ',' + std::to_string(row.generated) + ',' +
               format_detail::fixed(row.original, 6) + ',' +
               format_detail::fixed(row.updated, 6) + ',' +
               format_detail::fixed(row.change, 6) + ',' +
               format_detail::fixed(row.test.p, 6) + ',' +
               (row.significant ? "1" : "0") + '\n';
      }
    }
    return out;
  }
  return report_text(reports);
}

// ---- sweep (scoring side) ----

struct SweepOptions {
  std::vector<fs::path> enriched;     // one per prediction file, or one shared
  std::vector<fs::path> predictions;
  ReportFormat format = ReportFormat::kText;
};

inline std::string cmd_sweep_report(const SweepOptions& o) {
  if (o.predictions.empty() || o.enriched.empty()) {
    throw ConfigError("sweep needs --enriched and --predictions");
  }
  if (o.enriched.size() != 1 && o.enriched.size() != o.predictions.size()) {
    throw ConfigError("give one enriched file or one per prediction file");
  }
  std::vector<std::vector<GeneratedInstance>> sets;
  for (const auto& p : o.enriched) sets.push_back(parse_enriched(io::read_file(p)));
  std::vector<PredictionSet> preds;
  for (const auto& p : o.predictions) preds.push_back(load_predictions(p));
  std::vector<SweepInput> inputs;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    inputs.push_back({&preds[i], &sets[sets.size() == 1 ? 0 : i]});
  }
  auto curve = sweep_report(inputs);
  switch (o.format) {
    case ReportFormat::kJson:
      return sweep_json(curve);
    case ReportFormat::kCsv:
      return sweep_csv(curve);
    case ReportFormat::kText:
      break;
  }
  return sweep_text(curve);
}

// ---- review round trip ----

inline std::string cmd_review_export(const fs::path& enriched) {
  return serialize_review(review_rows(parse_enriched(io::read_file(enriched))));
}

struct ReviewImportOptions {
  fs::path enriched;
  fs::path review;
  std::optional<fs::path> second_review;  // for agreement
  fs::path output;
};

inline std::string acceptance_summary(const ImportResult& r) {
  auto pct = [](double v) { return format_detail::fixed(100.0 * v, 2) + "%"; };
  std::vector<std::vector<std::string>> rows = {
      {"check", "accepted", "total", "acceptance rate"},
      {"fluency", std::to_string(r.fluency.accepted),
       std::to_string(r.fluency.total), pct(r.fluency.rate())},
      {"sentiment", std::to_string(r.sentiment.accepted),
       std::to_string(r.sentiment.total), pct(r.sentiment.rate())}};
  std::string out = format_detail::render_table(rows);
  out += "fixed\t" + std::to_string(r.fixed) + "\ndropped\t" +
         std::to_string(r.dropped) + '\n';
  return out;
}

struct ReviewImportOutcome {
  ImportResult result;
  std::string summary;
};

// Writes the reviewed test set; throws ValidationError listing the failing
// rows (and writes nothing) when any fixed text breaks an aspect term.
inline ReviewImportOutcome cmd_review_import(const ReviewImportOptions& o) {
  auto instances = parse_enriched(io::read_file(o.enriched));
  auto rows = parse_review(io::read_file(o.review), true);
  ReviewImportOutcome out;
  out.result = import_review(instances, rows);
  if (!out.result.errors.empty()) {
    std::string msg = std::to_string(out.result.errors.size()) +
                      " row error(s): " + out.result.errors.front();
    throw ValidationError(msg);
  }
  out.summary = acceptance_summary(out.result);
  if (o.second_review) {
    auto other = parse_review(io::read_file(*o.second_review), true);
    std::map<std::string, const ReviewRecord*> by_id;
    for (const auto& r : other) by_id[r.new_id] = &r;
    std::vector<Verdict> fa, fb, sa, sb;
    for (const auto& r : rows) {
      auto it = by_id.find(r.new_id);
      if (it == by_id.end()) {
        throw ConfigError("second review lacks row " + r.new_id);
      }
      fa.push_back(*r.fluency);
      fb.push_back(*it->second->fluency);
      sa.push_back(*r.sentiment);
      sb.push_back(*it->second->sentiment);
    }
    auto f = agreement(fa, fb);
    auto s = agreement(sa, sb);
    auto pct = [](double v) { return format_detail::fixed(100.0 * v, 2) + "%"; };
    out.summary += format_detail::render_table(
        {{"check", "raw agreement", "cohen's kappa"},
         {"fluency", pct(f.raw), format_detail::fixed(f.kappa, 4)},
         {"sentiment", pct(s.raw), format_detail::fixed(s.kappa, 4)}});
  }
  io::write_file_atomic(o.output, serialize_enriched(out.result.instances));
  return out;
}

}  // namespace arts::app

#endif  // ARTS_APP_COMMANDS_HPP_

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

// Command-line front end: generate, stats, evaluate, review-export,
// review-import and sweep.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arts/app/commands.hpp"

namespace {

namespace fs = std::filesystem;
using namespace arts;
using namespace arts::app;

struct CorpusFlags {
  std::string input;
  std::string format;
  std::string opinions;

  std::optional<CorpusInput> get() const {
    if (input.empty()) return std::nullopt;
    CorpusInput c;
    c.path = input;
    if (!format.empty()) {
      c.format = parse_format(format);
      if (!c.format) throw ConfigError("--format must be xml or jsonl");
    }
    if (!opinions.empty()) c.opinions = opinions;
    return c;
  }
};

std::optional<fs::path> opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return fs::path(s);
}

ReportFormat report_format(const std::string& s) {
  auto f = parse_report_format(s);
  if (!f) throw ConfigError("--report must be text, json or csv");
  return *f;
}

void emit(const std::string& content, const std::string& output) {
  if (output.empty()) {
    std::cout << content;
  } else {
    io::write_file_atomic(output, content);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Aspect robustness test-set toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // generate
  CorpusFlags gen_in, gen_train;
  std::string wordnet, antonyms, adverbs, aspect_set, strategies = "revtgt,revnon,adddiff";
  std::string out_dir = ".", manifest;
  std::uint64_t seed = 0;
  int k = 0;
  unsigned threads = 1;
  auto* gen = app.add_subcommand("generate", "Generate an enriched test set");
  gen->add_option("--input", gen_in.input, "Test corpus (.xml or .jsonl)");
  gen->add_option("--format", gen_in.format, "Corpus format: xml or jsonl")
      ->check(CLI::IsMember({"xml", "jsonl"}));
  gen->add_option("--opinions", gen_in.opinions, "Opinion-span TSV for the input");
  gen->add_option("--train", gen_train.input, "Training corpus");
  gen->add_option("--train-opinions", gen_train.opinions, "Opinion TSV for --train");
  auto* wn = gen->add_option("--wordnet", wordnet, "WordNet database directory");
  auto* tsv = gen->add_option("--antonyms-tsv", antonyms, "Antonym TSV lexicon");
  wn->excludes(tsv);
  gen->add_option("--adverbs", adverbs, "Degree-adverb list (overrides mining)");
  gen->add_option("--aspect-set", aspect_set, "AspectSet TSV (overrides building)");
  auto* seed_opt = gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--strategies", strategies,
                  "Comma list of revtgt,revnon,adddiff,revnon_adddiff or all");
  gen->add_option("--k", k, "Fixed AddDiff size (1-16); default uniform 1-3");
  gen->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  gen->add_option("--out-dir", out_dir, "Output directory");
  auto* man_opt = gen->add_option("--from-manifest", manifest,
                                  "Re-run the configuration recorded in a manifest");
  man_opt->excludes(seed_opt);

  // stats
  CorpusFlags st_in;
  std::string st_enriched, st_output;
  bool st_json = false;
  auto* stats = app.add_subcommand("stats", "Dataset characteristics");
  stats->add_option("--input", st_in.input, "Original corpus");
  stats->add_option("--format", st_in.format)->check(CLI::IsMember({"xml", "jsonl"}));
  stats->add_option("--opinions", st_in.opinions);
  stats->add_option("--enriched", st_enriched, "Enriched JSONL");
  stats->add_flag("--json", st_json, "JSON instead of a text table");
  stats->add_option("--output", st_output, "Write to a file instead of stdout");

  // evaluate
  std::string ev_gold, ev_report = "text", ev_output;
  std::vector<std::string> ev_preds, ev_orig;
  auto* eval = app.add_subcommand("evaluate", "Score prediction files");
  eval->add_option("--gold", ev_gold, "Enriched JSONL")->required();
  eval->add_option("--predictions", ev_preds, "Prediction TSV per model")->required();
  eval->add_option("--original-predictions", ev_orig,
                   "Separate source-instance predictions, paired by position");
  eval->add_option("--report", ev_report, "text, json or csv");
  eval->add_option("--output", ev_output, "Write to a file instead of stdout");

  // review-export
  std::string rx_enriched, rx_output;
  auto* rexp = app.add_subcommand("review-export", "Write a review TSV");
  rexp->add_option("--enriched", rx_enriched)->required();
  rexp->add_option("--output", rx_output, "Review TSV (stdout when omitted)");

  // review-import
  std::string ri_enriched, ri_review, ri_second, ri_output;
  auto* rimp = app.add_subcommand("review-import", "Apply review verdicts");
  rimp->add_option("--enriched", ri_enriched)->required();
  rimp->add_option("--review", ri_review, "Completed review TSV")->required();
  rimp->add_option("--second-review", ri_second,
                   "Second annotator's TSV, for agreement");
  rimp->add_option("--output", ri_output, "Final enriched JSONL")->required();

  // sweep
  CorpusFlags sw_in, sw_train;
  std::string sw_wordnet, sw_antonyms, sw_aspect_set, sw_out_dir = ".",
      sw_report = "text", sw_output;
  std::uint64_t sw_seed = 0;
  int sw_kmax = 5;
  std::vector<std::string> sw_enriched, sw_preds;
  auto* sweep = app.add_subcommand(
      "sweep", "Generate AddDiff for k = 1..k-max, or score per-k predictions");
  sweep->add_option("--input", sw_in.input, "Test corpus (generation mode)");
  sweep->add_option("--format", sw_in.format)->check(CLI::IsMember({"xml", "jsonl"}));
  sweep->add_option("--opinions", sw_in.opinions);
  sweep->add_option("--train", sw_train.input);
  sweep->add_option("--train-opinions", sw_train.opinions);
  sweep->add_option("--wordnet", sw_wordnet);
  sweep->add_option("--antonyms-tsv", sw_antonyms);
  sweep->add_option("--aspect-set", sw_aspect_set);
  sweep->add_option("--seed", sw_seed);
  sweep->add_option("--k-max", sw_kmax)->check(CLI::Range(1, kMaxFixedK));
  sweep->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
  sweep->add_option("--out-dir", sw_out_dir);
  sweep->add_option("--enriched", sw_enriched, "Enriched JSONL (scoring mode)");
  sweep->add_option("--predictions", sw_preds, "Prediction TSVs (scoring mode)");
  sweep->add_option("--report", sw_report, "text, json or csv");
  sweep->add_option("--output", sw_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (gen->parsed()) {
    GenerateOutcome out;
    if (!manifest.empty()) {
      out = cmd_replay(manifest, out_dir, threads);
    } else {
      if (gen_in.input.empty()) throw ConfigError("--input is required");
      if (seed_opt->count() == 0) throw ConfigError("--seed is required");
      GenerateOptions o;
      o.input = *gen_in.get();
      o.train = gen_train.get();
      o.wordnet = opt(wordnet);
      o.antonyms_tsv = opt(antonyms);
      o.adverbs = opt(adverbs);
      o.aspect_set = opt(aspect_set);
      o.seed = seed;
      o.strategies = parse_strategy_list(strategies);
      if (k != 0) o.k = k;
      o.threads = threads;
      o.out_dir = out_dir;
      out = cmd_generate(o);
    }
    std::cout << generate_summary(out);
    return 0;
  }
  if (stats->parsed()) {
    StatsOptions o;
    o.input = st_in.get();
    o.enriched = opt(st_enriched);
    o.json = st_json;
    emit(cmd_stats(o), st_output);
    return 0;
  }
  if (eval->parsed()) {
    EvaluateOptions o;
    o.gold = ev_gold;
    for (const auto& p : ev_preds) o.predictions.push_back(p);
    for (const auto& p : ev_orig) o.original_predictions.push_back(p);
    o.format = report_format(ev_report);
    emit(cmd_evaluate(o), ev_output);
    return 0;
  }
  if (rexp->parsed()) {
    emit(cmd_review_export(rx_enriched), rx_output);
    return 0;
  }
  if (rimp->parsed()) {
    ReviewImportOptions o;
    o.enriched = ri_enriched;
    o.review = ri_review;
    o.second_review = opt(ri_second);
    o.output = ri_output;
    std::cout << cmd_review_import(o).summary;
    return 0;
  }
  if (sweep->parsed()) {
    if (!sw_preds.empty()) {
      SweepOptions o;
      for (const auto& p : sw_enriched) o.enriched.push_back(p);
      for (const auto& p : sw_preds) o.predictions.push_back(p);
      o.format = report_format(sw_report);
      emit(cmd_sweep_report(o), sw_output);
      return 0;
    }
    if (sw_in.input.empty()) {
      throw ConfigError("sweep needs --input (generate) or --predictions (score)");
    }
    GenerateOptions o;
    o.input = *sw_in.get();
    o.train = sw_train.get();
    o.wordnet = opt(sw_wordnet);
    o.antonyms_tsv = opt(sw_antonyms);
    o.aspect_set = opt(sw_aspect_set);
    o.seed = sw_seed;
    for (int i = 1; i <= sw_kmax; ++i) o.sweep_ks.push_back(i);
    o.threads = threads;
    o.out_dir = sw_out_dir;
    std::cout << generate_summary(cmd_generate(o));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arts::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: IoError: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
  }
  return 1;
}

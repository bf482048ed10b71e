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

#ifndef ARTS_APP_REVIEW_HPP_
#define ARTS_APP_REVIEW_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/spans.hpp"
#include "arts/corpus/types.hpp"
#include "arts/errors.hpp"
#include "arts/strategies/types.hpp"
#include "arts/text.hpp"

namespace arts::app {

enum class Verdict { kAccept, kReject };

inline std::optional<Verdict> parse_verdict(std::string_view s) {
  if (s == "accept") return Verdict::kAccept;
  if (s == "reject") return Verdict::kReject;
  return std::nullopt;
}

inline std::string_view to_string(Verdict v) {
  return v == Verdict::kAccept ? "accept" : "reject";
}

// One reviewed row. Verdicts are unset in a freshly exported file.
struct ReviewRecord {
  std::string new_id;
  std::string text;
  Polarity target_polarity = Polarity::kNeutral;
  std::optional<Verdict> fluency;
  std::optional<Verdict> sentiment;
  std::optional<std::string> fixed_text;

  bool rejected() const {
    return fluency == Verdict::kReject || sentiment == Verdict::kReject;
  }
};

inline constexpr std::string_view kReviewHeader =
    "new_id\ttext\ttarget_polarity\tfluency\tsentiment\tfixed_text";

namespace review_detail {

// Tabs and newlines cannot appear inside a TSV cell.
inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else {
      out += c;
    }
  }
  return out;
}

inline std::string unescape(std::string_view s, std::size_t line) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) throw SchemaError(line, "dangling escape");
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: throw SchemaError(line, "unknown escape");
    }
  }
  return out;
}

}  // namespace review_detail

// One row per generated (non-source) instance, verdict columns empty.
inline std::vector<ReviewRecord> review_rows(
    const std::vector<GeneratedInstance>& instances) {
  std::vector<ReviewRecord> out;
  for (const auto& g : instances) {
    if (g.strategy.kind == StrategyKind::kSource) continue;
    out.push_back({g.new_id, g.sentence.text, g.gold_label, {}, {}, {}});
  }
  return out;
}

inline std::string serialize_review(const std::vector<ReviewRecord>& rows) {
  using review_detail::escape;
  std::string out(kReviewHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += escape(r.new_id) + '\t' + escape(r.text) + '\t' +
           std::string(arts::to_string(r.target_polarity)) + '\t' +
           (r.fluency ? std::string(to_string(*r.fluency)) : "") + '\t' +
           (r.sentiment ? std::string(to_string(*r.sentiment)) : "") + '\t' +
           (r.fixed_text ? escape(*r.fixed_text) : "") + '\n';
  }
  return out;
}

// Parses a review TSV. With `require_verdicts`, every row must carry both
// verdicts; fixed_text is only allowed on rejected rows.
inline std::vector<ReviewRecord> parse_review(std::string_view input,
                                              bool require_verdicts) {
  using review_detail::unescape;
  std::vector<ReviewRecord> out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line == kReviewHeader) continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 6) {
      throw SchemaError(line_no, "expected 6 review columns");
    }
    ReviewRecord r;
    r.new_id = unescape(cols[0], line_no);
    r.text = unescape(cols[1], line_no);
    auto pol = parse_polarity(cols[2]);
    if (!pol) throw SchemaError(line_no, "invalid target_polarity");
    r.target_polarity = *pol;
    for (auto [col, slot] : {std::pair{3, &r.fluency}, std::pair{4, &r.sentiment}}) {
      const std::string cell(text::trim(cols[col]));
      if (cell.empty()) {
        if (require_verdicts) {
          throw SchemaError(line_no, "missing verdict for " + r.new_id);
        }
        continue;
      }
      auto v = parse_verdict(cell);
      if (!v) throw SchemaError(line_no, "verdict must be accept or reject");
      *slot = *v;
    }
    if (!cols[5].empty()) {
      r.fixed_text = unescape(cols[5], line_no);
      if (!r.rejected()) {
        throw SchemaError(line_no, "fixed_text on an accepted row " + r.new_id);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Re-derives every aspect term span in `new_text` by unique search. Opinion
// spans whose surface text no longer occurs exactly once are dropped.
inline Sentence reanchor(const Sentence& s, std::string new_text) {
  Sentence out;
  out.sentence_id = s.sentence_id;
  out.text = std::move(new_text);
  for (const auto& a : s.aspects) {
    auto hits = find_all(out.text, a.term);
    if (hits.size() != 1) {
      throw ValidationError(
          "aspect term \"" + a.term + "\" occurs " +
          std::to_string(hits.size()) + " times in the fixed text of " +
          s.sentence_id);
    }
    AspectInstance b = a;
    b.term_span = Span{hits[0], hits[0] + a.term.size()};
    b.opinions.clear();
    for (const auto& op : a.opinions) {
      const std::string surface(op.span.slice(s.text));
      auto ohits = find_all(out.text, surface);
      if (ohits.size() == 1) {
        b.opinions.push_back({Span{ohits[0], ohits[0] + surface.size()},
                              op.polarity});
      }
    }
    out.aspects.push_back(std::move(b));
  }
  validate_sentence(out);
  return out;
}

struct CheckSummary {
  std::size_t accepted = 0;
  std::size_t total = 0;
  double rate() const {
    return total == 0 ? 1.0
                      : static_cast<double>(accepted) / static_cast<double>(total);
  }
};

struct ImportResult {
  std::vector<GeneratedInstance> instances;
  CheckSummary fluency;
  CheckSummary sentiment;
  std::size_t fixed = 0;
  std::size_t dropped = 0;
  std::vector<std::string> errors;  // one per failing row
};

// Applies verdicts: accepted rows are kept unchanged, rejected rows with a
// fix get the fixed text and re-anchored spans, rejected rows without a fix
// are dropped. Source instances pass through. Every generated instance needs
// a review row.
inline ImportResult import_review(const std::vector<GeneratedInstance>& instances,
                                  const std::vector<ReviewRecord>& rows) {
  std::map<std::string, const ReviewRecord*> by_id;
  for (const auto& r : rows) {
    if (!by_id.emplace(r.new_id, &r).second) {
      throw SchemaError(0, "duplicate review row for " + r.new_id);
    }
  }
  ImportResult res;
  std::vector<std::string> missing;
  for (const auto& g : instances) {
    if (g.strategy.kind != StrategyKind::kSource && !by_id.count(g.new_id)) {
      missing.push_back(g.new_id);
    }
  }
  if (!missing.empty()) {
    throw ConfigError(std::to_string(missing.size()) +
                      " generated instance(s) lack review verdicts, first: " +
                      missing.front());
  }
  for (const auto& g : instances) {
    if (g.strategy.kind == StrategyKind::kSource) {
      res.instances.push_back(g);
      continue;
    }
    const ReviewRecord& r = *by_id.at(g.new_id);
    if (!r.fluency || !r.sentiment) {
      throw ConfigError("missing verdict for " + g.new_id);
    }
    ++res.fluency.total;
    ++res.sentiment.total;
    res.fluency.accepted += *r.fluency == Verdict::kAccept;
    res.sentiment.accepted += *r.sentiment == Verdict::kAccept;
    if (!r.rejected()) {
      res.instances.push_back(g);
      continue;
    }
    if (!r.fixed_text) {
      ++res.dropped;
      continue;
    }
    try {
      GeneratedInstance fixed = g;
      fixed.sentence = reanchor(g.sentence, *r.fixed_text);
      res.instances.push_back(std::move(fixed));
      ++res.fixed;
    } catch (const Error& e) {
      res.errors.push_back(g.new_id + ": " + e.what());
    }
  }
  return res;
}

struct Agreement {
  std::size_t n = 0;
  double raw = 0.0;    // fraction of identical verdicts
  double kappa = 0.0;  // Cohen's kappa; 1 when both raters are constant and agree
};

// Agreement between two raters on paired accept/reject verdicts.
inline Agreement agreement(const std::vector<Verdict>& a,
                           const std::vector<Verdict>& b) {
  if (a.size() != b.size()) throw DomainError("unpaired verdict lists");
  Agreement out;
  out.n = a.size();
  if (a.empty()) return out;
  std::size_t same = 0, a_acc = 0, b_acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same += a[i] == b[i];
    a_acc += a[i] == Verdict::kAccept;
    b_acc += b[i] == Verdict::kAccept;
  }
  const double n = static_cast<double>(a.size());
  out.raw = static_cast<double>(same) / n;
  const double pa = static_cast<double>(a_acc) / n;
  const double pb = static_cast<double>(b_acc) / n;
  const double pe = pa * pb + (1 - pa) * (1 - pb);
  out.kappa = pe >= 1.0 ? 1.0 : (out.raw - pe) / (1.0 - pe);
  return out;
}

}  // namespace arts::app

#endif  // ARTS_APP_REVIEW_HPP_

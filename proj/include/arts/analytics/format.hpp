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

#ifndef ARTS_ANALYTICS_FORMAT_HPP_
#define ARTS_ANALYTICS_FORMAT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arts/analytics/report.hpp"
#include "arts/analytics/stats.hpp"

namespace arts {

namespace format_detail {

using Json = nlohmann::ordered_json;

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

inline std::string percent(double v) { return fixed(100.0 * v, 2); }

inline std::string signed_percent(double v) {
  std::string s = fixed(100.0 * v, 2);
  return v >= 0.0 ? "+" + s : s;
}

// Left-aligned first column, right-aligned others, two-space gutter.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) line += "  ";
      const std::string pad(width[i] - r[i].size(), ' ');
      line += i == 0 ? r[i] + pad : pad + r[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

inline Json number_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

}  // namespace format_detail

// Models sorted by the entire set's new value (ARS), best first; ties keep
// input order.
inline std::vector<EvalReport> sorted_reports(std::vector<EvalReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EvalReport& a, const EvalReport& b) {
                     return a.ars > b.ars;
                   });
  return reports;
}

// One row per model; each subset cell is "Ori -> New (Change)" in percent,
// with "*" when the change is significant.
inline std::string report_text(const std::vector<EvalReport>& reports) {
  using namespace format_detail;
  std::vector<std::string> subsets = {"entire", "revtgt", "revnon", "adddiff",
                                      "combined"};
  std::vector<std::string> present;
  for (const auto& name : subsets) {
    for (const auto& r : reports) {
      if (r.row(name) != nullptr) {
        present.push_back(name);
        break;
      }
    }
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"model"};
  for (const auto& name : present) head.push_back(name);
  head.push_back("ars");
  rows.push_back(head);
  for (const auto& r : reports) {
    std::vector<std::string> line = {r.model_name.empty() ? "-" : r.model_name};
    for (const auto& name : present) {
      const SubsetRow* row = r.row(name);
      if (row == nullptr) {
        line.push_back("-");
        continue;
      }
      line.push_back(percent(row->original) + " -> " + percent(row->updated) +
                     " (" + signed_percent(row->change) + ")" +
                     (row->significant ? "*" : ""));
    }
    line.push_back(percent(r.ars));
    rows.push_back(std::move(line));
  }
  return render_table(rows);
}

inline format_detail::Json report_json(const EvalReport& r) {
  using namespace format_detail;
  Json j;
  j["model"] = r.model_name;
  j["ars"] = r.ars;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["subset"] = row.name;
    x["sources"] = row.sources;
    x["generated"] = row.generated;
    x["original"] = row.original;
    x["new"] = row.updated;
    x["change"] = row.change;
    x["relative_change"] =
        row.relative_change ? Json(*row.relative_change) : Json(nullptr);
    x["unit_ars"] = row.unit_ars;
    x["t"] = number_or_null(row.test.t);
    x["df"] = row.test.df;
    x["p"] = row.test.p;
    x["significant"] = row.significant;
    rows.push_back(std::move(x));
  }
  j["subsets"] = std::move(rows);
  return j;
}

inline std::string reports_json(const std::vector<EvalReport>& reports) {
  format_detail::Json arr = format_detail::Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + '\n';
}

inline std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out = "k,accuracy\n";
  for (const auto& p : points) {
    out += std::to_string(p.k) + ',' + format_detail::fixed(p.accuracy, 6) + '\n';
  }
  return out;
}

inline std::string sweep_text(const std::vector<SweepPoint>& points) {
  std::vector<std::vector<std::string>> rows = {{"k", "n", "accuracy"}};
  for (const auto& p : points) {
    rows.push_back({std::to_string(p.k), std::to_string(p.n),
                    format_detail::percent(p.accuracy)});
  }
  return format_detail::render_table(rows);
}

inline std::string sweep_json(const std::vector<SweepPoint>& points) {
  format_detail::Json arr = format_detail::Json::array();
  for (const auto& p : points) {
    arr.push_back({{"k", p.k}, {"n", p.n}, {"accuracy", p.accuracy}});
  }
  return arr.dump(2) + '\n';
}

// Named columns of statistics ("Ori", "ARTS"), one metric per row.
using StatsColumns = std::vector<std::pair<std::string, DatasetStats>>;

inline std::string stats_text(const StatsColumns& cols) {
  using namespace format_detail;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"metric"};
  for (const auto& [name, st] : cols) head.push_back(name);
  rows.push_back(head);
  auto add = [&](const std::string& metric, auto get) {
    std::vector<std::string> line = {metric};
    for (const auto& [name, st] : cols) line.push_back(get(st));
    rows.push_back(std::move(line));
  };
  add("instances", [](const DatasetStats& s) { return std::to_string(s.instances); });
  add("sentences", [](const DatasetStats& s) { return std::to_string(s.sentences); });
  add("words/sent", [](const DatasetStats& s) { return fixed(s.words_per_sentence, 2); });
  add("vocabulary", [](const DatasetStats& s) { return std::to_string(s.vocabulary); });
  add("positive", [](const DatasetStats& s) { return std::to_string(s.positive); });
  add("negative", [](const DatasetStats& s) { return std::to_string(s.negative); });
  add("neutral", [](const DatasetStats& s) { return std::to_string(s.neutral); });
  add("pos/neg ratio", [](const DatasetStats& s) {
    return s.positive_negative_ratio ? fixed(*s.positive_negative_ratio, 2)
                                     : std::string("-");
  });
  add("aspects/sent", [](const DatasetStats& s) { return fixed(s.aspects_per_sentence, 2); });
  add("opp. nontgt >= 1", [](const DatasetStats& s) {
    return percent(s.opposite_at_least_one) + "%";
  });
  add("opp. nontgt all", [](const DatasetStats& s) {
    return percent(s.opposite_all) + "%";
  });
  add("opp. nontgt/sent", [](const DatasetStats& s) {
    return fixed(s.opposite_per_sentence, 2);
  });
  return render_table(rows);
}

inline std::string stats_json(const StatsColumns& cols) {
  using format_detail::Json;
  Json out;
  for (const auto& [name, s] : cols) {
    Json j;
    j["instances"] = s.instances;
    j["sentences"] = s.sentences;
    j["words_per_sentence"] = s.words_per_sentence;
    j["vocabulary"] = s.vocabulary;
    j["positive"] = s.positive;
    j["negative"] = s.negative;
    j["neutral"] = s.neutral;
    j["positive_negative_ratio"] = s.positive_negative_ratio
                                       ? Json(*s.positive_negative_ratio)
                                       : Json(nullptr);
    j["aspects_per_sentence"] = s.aspects_per_sentence;
    j["opposite_at_least_one"] = s.opposite_at_least_one;
    j["opposite_all"] = s.opposite_all;
    j["opposite_per_sentence"] = s.opposite_per_sentence;
    out[name] = std::move(j);
  }
  return out.dump(2) + '\n';
}

}  // namespace arts

#endif  // ARTS_ANALYTICS_FORMAT_HPP_

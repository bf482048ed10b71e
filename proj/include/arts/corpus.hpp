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

#ifndef ARTS_CORPUS_HPP_
#define ARTS_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "arts/corpus/filter.hpp"
#include "arts/corpus/jsonl.hpp"
#include "arts/corpus/opinions.hpp"
#include "arts/corpus/spans.hpp"
#include "arts/corpus/tokenize.hpp"
#include "arts/corpus/types.hpp"
#include "arts/corpus/xml.hpp"
#include "arts/io.hpp"

namespace arts {

enum class CorpusFormat { kXml, kJsonl };

inline std::optional<CorpusFormat> parse_format(std::string_view s) {
  if (s == "xml") return CorpusFormat::kXml;
  if (s == "jsonl") return CorpusFormat::kJsonl;
  return std::nullopt;
}

inline CorpusFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".xml" ? CorpusFormat::kXml : CorpusFormat::kJsonl;
}

inline Dataset parse(std::string_view input, CorpusFormat format,
                     std::string domain_name = {}, Split split = Split::kTest,
                     ParseDiagnostics* diagnostics = nullptr) {
  return format == CorpusFormat::kXml
             ? parse_semeval_xml(input, std::move(domain_name), split,
                                 diagnostics)
             : parse_jsonl(input, std::move(domain_name), split, diagnostics);
}

inline std::string serialize(const Dataset& ds, CorpusFormat format) {
  return format == CorpusFormat::kXml ? serialize_xml(ds) : serialize_jsonl(ds);
}

inline Dataset load_dataset(const std::filesystem::path& path,
                            std::optional<CorpusFormat> format = std::nullopt,
                            std::string domain_name = {},
                            Split split = Split::kTest) {
  return parse(io::read_file(path), format.value_or(format_from_path(path)),
               std::move(domain_name), split);
}

// Applies the split file (one sentence id per line) to `ds`, keeping only the
// listed sentences in file order of the dataset.
inline Dataset select_split(const Dataset& ds, std::string_view id_list,
                            Split split) {
  std::set<std::string> wanted;
  for (const auto& line : text::split(id_list, '\n')) {
    auto id = text::trim(line);
    if (!id.empty()) wanted.emplace(id);
  }
  Dataset out;
  out.domain_name = ds.domain_name;
  out.split = split;
  for (const auto& s : ds.sentences) {
    if (wanted.count(s.sentence_id)) out.sentences.push_back(s);
  }
  for (const auto& c : ds.conflicts) {
    if (wanted.count(c.sentence_id)) out.conflicts.push_back(c);
  }
  return out;
}

}  // namespace arts

#endif  // ARTS_CORPUS_HPP_

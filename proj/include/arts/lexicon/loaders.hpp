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

#ifndef ARTS_LEXICON_LOADERS_HPP_
#define ARTS_LEXICON_LOADERS_HPP_

#include <charconv>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arts/errors.hpp"
#include "arts/io.hpp"
#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/text.hpp"

namespace arts {

namespace wndb_detail {

struct Synset {
  std::vector<std::string> words;
  struct Pointer {
    std::string symbol;
    std::size_t target_offset;
    char target_pos;
    unsigned source_word;
    unsigned target_word;
  };
  std::vector<Pointer> pointers;
};

// Adjective lemmas in data.adj may carry a syntactic marker: "big(a)".
inline std::string strip_marker(std::string_view w) {
  auto paren = w.find('(');
  return std::string(paren == std::string_view::npos ? w : w.substr(0, paren));
}

inline std::size_t parse_number(std::string_view field, int base,
                                const std::string& file, std::size_t offset) {
  std::size_t v = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v, base);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw LoadError(file + ": unparseable record at byte offset " +
                    std::to_string(offset) + " (field '" + std::string(field) +
                    "')");
  }
  return v;
}

// Parses one data.* file into offset -> synset.
inline std::unordered_map<std::size_t, Synset> parse_data_file(
    std::string_view content, const std::string& file) {
  std::unordered_map<std::size_t, Synset> out;
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    const std::size_t line_offset = pos;
    pos = nl + 1;
    if (line.empty() || line[0] == ' ') continue;  // license header
    auto bar = line.find(" | ");
    if (bar != std::string_view::npos) line = line.substr(0, bar);
    auto fields = text::split_whitespace(line);
    auto need = [&](std::size_t i) -> const std::string& {
      if (i >= fields.size()) {
        throw LoadError(file + ": truncated record at byte offset " +
                        std::to_string(line_offset));
      }
      return fields[i];
    };
    std::size_t offset = parse_number(need(0), 10, file, line_offset);
    std::size_t w_cnt = parse_number(need(3), 16, file, line_offset);
    Synset syn;
    std::size_t i = 4;
    for (std::size_t w = 0; w < w_cnt; ++w, i += 2) {
      syn.words.push_back(strip_marker(need(i)));
      need(i + 1);
    }
    std::size_t p_cnt = parse_number(need(i), 10, file, line_offset);
    ++i;
    for (std::size_t p = 0; p < p_cnt; ++p, i += 4) {
      const std::string& st = need(i + 3);
      if (st.size() != 4) {
        throw LoadError(file + ": bad source/target field at byte offset " +
                        std::to_string(line_offset));
      }
      Synset::Pointer ptr;
      ptr.symbol = need(i);
      ptr.target_offset = parse_number(need(i + 1), 10, file, line_offset);
      ptr.target_pos = need(i + 2).empty() ? 'n' : need(i + 2)[0];
      ptr.source_word = static_cast<unsigned>(
          parse_number(std::string_view(st).substr(0, 2), 16, file, line_offset));
      ptr.target_word = static_cast<unsigned>(
          parse_number(std::string_view(st).substr(2, 2), 16, file, line_offset));
      syn.pointers.push_back(std::move(ptr));
    }
    out.emplace(offset, std::move(syn));
  }
  return out;
}

inline PosTag pos_of_letter(char c) {
  switch (c) {
    case 'a':
    case 's':
      return PosTag::kAdjective;
    case 'v':
      return PosTag::kVerb;
    case 'r':
      return PosTag::kAdverb;
    default:
      return PosTag::kNoun;
  }
}

}  // namespace wndb_detail

// Loads antonym pointers ("!"), lemma membership and exception lists from a
// WordNet 3.x database directory (WNDB format).
inline AntonymLexicon load_wordnet(const std::filesystem::path& dir) {
  using namespace wndb_detail;
  struct PosFiles {
    PosTag pos;
    const char* data;
    const char* exc;
  };
  const PosFiles files[] = {{PosTag::kAdjective, "data.adj", "adj.exc"},
                            {PosTag::kVerb, "data.verb", "verb.exc"},
                            {PosTag::kNoun, "data.noun", "noun.exc"},
                            {PosTag::kAdverb, "data.adv", "adv.exc"}};

  auto read = [&](const char* name) {
    auto path = dir / name;
    if (!std::filesystem::exists(path)) {
      throw LoadError("missing WordNet file " + path.string());
    }
    return io::read_file(path);
  };

  AntonymLexicon lex;
  std::unordered_map<char, std::unordered_map<std::size_t, Synset>> synsets;
  for (const auto& f : files) {
    std::string path = (dir / f.data).string();
    auto parsed = parse_data_file(read(f.data), path);
    for (const auto& [offset, syn] : parsed) {
      for (const auto& w : syn.words) lex.add_lemma(w, f.pos);
    }
    char key = f.pos == PosTag::kAdjective ? 'a'
               : f.pos == PosTag::kVerb    ? 'v'
               : f.pos == PosTag::kNoun    ? 'n'
                                           : 'r';
    synsets.emplace(key, std::move(parsed));
  }

  for (const auto& [pos_key, table] : synsets) {
    PosTag pos = pos_of_letter(pos_key);
    for (const auto& [offset, syn] : table) {
      for (const auto& ptr : syn.pointers) {
        if (ptr.symbol != "!" || ptr.source_word == 0 || ptr.target_word == 0) {
          continue;
        }
        char target_key = ptr.target_pos == 's' ? 'a' : ptr.target_pos;
        auto tt = synsets.find(target_key);
        if (tt == synsets.end()) continue;
        auto target = tt->second.find(ptr.target_offset);
        if (target == tt->second.end()) {
          throw LoadError("antonym pointer from synset " +
                          std::to_string(offset) + " targets missing synset " +
                          std::to_string(ptr.target_offset));
        }
        if (ptr.source_word > syn.words.size() ||
            ptr.target_word > target->second.words.size()) {
          throw LoadError("antonym pointer word index out of range in synset " +
                          std::to_string(offset));
        }
        lex.add_antonym_pair(syn.words[ptr.source_word - 1],
                             target->second.words[ptr.target_word - 1], pos);
      }
    }
  }

  for (const auto& f : files) {
    std::string content = read(f.exc);
    for (const auto& line : text::split(content, '\n')) {
      auto fields = text::split_whitespace(line);
      if (fields.size() < 2) continue;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        lex.add_exception(fields[0], fields[i], f.pos);
      }
    }
  }
  return lex;
}

// Loads "lemma<TAB>pos<TAB>antonym" lines. A two-column "lemma<TAB>pos" line
// only records the lemma's POS. Blank lines and '#' comments are ignored; the
// symmetric closure is implied by AntonymLexicon.
inline AntonymLexicon load_tsv_lexicon(std::string_view input) {
  AntonymLexicon lex;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(input, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2 && cols.size() != 3) {
      throw SchemaError(line_no, "expected lemma<TAB>pos[<TAB>antonym]");
    }
    auto pos = parse_pos(cols[1]);
    if (!pos || *pos == PosTag::kOther) {
      throw SchemaError(line_no, "bad POS token \"" + cols[1] + "\"");
    }
    if (cols.size() == 2) {
      lex.add_lemma(text::trim(cols[0]), *pos);
    } else {
      lex.add_antonym_pair(text::trim(cols[0]), text::trim(cols[2]), *pos);
    }
  }
  return lex;
}

}  // namespace arts

#endif  // ARTS_LEXICON_LOADERS_HPP_

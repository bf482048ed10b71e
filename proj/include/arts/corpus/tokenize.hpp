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

#ifndef ARTS_CORPUS_TOKENIZE_HPP_
#define ARTS_CORPUS_TOKENIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "arts/corpus/types.hpp"
#include "arts/text.hpp"

namespace arts {

struct Token {
  std::string text;
  Span span;

  bool is_word() const { return !text.empty() && text::is_word_char(text[0]); }

  friend bool operator==(const Token&, const Token&) = default;
};

// Offset-preserving tokenizer. A token is either a maximal run of word
// characters (an apostrophe between two word characters stays inside the
// word, so "don't" is one token) or a single punctuation character.
// Whitespace is never part of a token, so slicing the text at token spans and
// keeping the gaps reproduces the input exactly.
inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = input.size();
  while (i < n) {
    char c = input[i];
    if (text::is_space(c)) {
      ++i;
      continue;
    }
    if (!text::is_word_char(c)) {
      tokens.push_back({std::string(1, c), {i, i + 1}});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n) {
      if (text::is_word_char(input[j])) {
        ++j;
      } else if (input[j] == '\'' && j + 1 < n &&
                 text::is_word_char(input[j + 1])) {
        j += 2;
      } else {
        break;
      }
    }
    tokens.push_back({std::string(input.substr(i, j - i)), {i, j}});
    i = j;
  }
  return tokens;
}

// Number of word tokens (punctuation excluded).
inline std::size_t word_count(std::string_view input) {
  std::size_t n = 0;
  for (const auto& t : tokenize(input)) {
    if (t.is_word()) ++n;
  }
  return n;
}

}  // namespace arts

#endif  // ARTS_CORPUS_TOKENIZE_HPP_

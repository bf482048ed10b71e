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

#ifndef ARTS_TEXT_HPP_
#define ARTS_TEXT_HPP_

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

// Small ASCII-oriented string helpers shared by every module. Bytes >= 0x80
// are treated as letters so UTF-8 words are never split.
namespace arts::text {

inline bool is_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}

inline bool is_lower(char c) {
  return std::islower(static_cast<unsigned char>(c)) != 0;
}

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

inline char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline char to_upper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return to_lower(c); });
  return out;
}

inline std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return to_upper(c); });
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    auto pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(begin));
      return out;
    }
    out.emplace_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Range>
std::string join(const Range& parts, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += sep;
    out += p;
    first = false;
  }
  return out;
}

// True when the word has an uppercase letter after its first character
// ("iPad", "GREAT", "McDonald"), which marks it as something whose case must
// not be normalized.
inline bool has_internal_capital(std::string_view word) {
  return word.size() > 1 &&
         std::any_of(word.begin() + 1, word.end(),
                     [](char c) { return is_upper(c); });
}

inline bool is_all_caps(std::string_view word) {
  bool any_alpha = false;
  for (char c : word) {
    if (is_lower(c)) return false;
    if (is_upper(c)) any_alpha = true;
  }
  return any_alpha && word.size() > 1;
}

inline std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = to_upper(out[0]);
  return out;
}

inline std::string decapitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = to_lower(out[0]);
  return out;
}

// Copies the case pattern of `model` onto `word`: ALL CAPS stays all caps,
// a leading capital is transferred, anything else is returned unchanged.
inline std::string match_case(std::string_view model, std::string_view word) {
  if (model.empty()) return std::string(word);
  if (is_all_caps(model)) return upper(word);
  if (is_upper(model.front())) return capitalize(word);
  return std::string(word);
}

}  // namespace arts::text

#endif  // ARTS_TEXT_HPP_

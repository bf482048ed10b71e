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

#ifndef ARTS_LEXICON_MORPHOLOGY_HPP_
#define ARTS_LEXICON_MORPHOLOGY_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arts/lexicon/antonym_lexicon.hpp"
#include "arts/text.hpp"

namespace arts {

struct IrregularVerb {
  std::string_view base;
  std::string_view past;
  std::string_view participle;
};

// Common irregular verbs. Consulted before the lexicon's exception lists.
inline constexpr IrregularVerb kIrregularVerbs[] = {
    {"be", "was", "been"},          {"have", "had", "had"},
    {"do", "did", "done"},          {"make", "made", "made"},
    {"go", "went", "gone"},         {"get", "got", "gotten"},
    {"take", "took", "taken"},      {"come", "came", "come"},
    {"give", "gave", "given"},      {"find", "found", "found"},
    {"think", "thought", "thought"}, {"tell", "told", "told"},
    {"become", "became", "become"}, {"leave", "left", "left"},
    {"feel", "felt", "felt"},       {"bring", "brought", "brought"},
    {"begin", "began", "begun"},    {"keep", "kept", "kept"},
    {"hold", "held", "held"},       {"write", "wrote", "written"},
    {"stand", "stood", "stood"},    {"hear", "heard", "heard"},
    {"let", "let", "let"},          {"mean", "meant", "meant"},
    {"set", "set", "set"},          {"meet", "met", "met"},
    {"run", "ran", "run"},          {"pay", "paid", "paid"},
    {"sit", "sat", "sat"},          {"speak", "spoke", "spoken"},
    {"lead", "led", "led"},         {"read", "read", "read"},
    {"grow", "grew", "grown"},      {"lose", "lost", "lost"},
    {"fall", "fell", "fallen"},     {"send", "sent", "sent"},
    {"build", "built", "built"},    {"understand", "understood", "understood"},
    {"draw", "drew", "drawn"},      {"break", "broke", "broken"},
    {"spend", "spent", "spent"},    {"cut", "cut", "cut"},
    {"rise", "rose", "risen"},      {"drive", "drove", "driven"},
    {"buy", "bought", "bought"},    {"wear", "wore", "worn"},
    {"choose", "chose", "chosen"},  {"eat", "ate", "eaten"},
    {"drink", "drank", "drunk"},    {"sell", "sold", "sold"},
    {"forget", "forgot", "forgotten"}, {"sleep", "slept", "slept"},
    {"win", "won", "won"},          {"fight", "fought", "fought"},
    {"teach", "taught", "taught"},  {"catch", "caught", "caught"},
    {"hang", "hung", "hung"},       {"shake", "shook", "shaken"},
    {"fly", "flew", "flown"},       {"freeze", "froze", "frozen"},
    {"hit", "hit", "hit"},          {"hurt", "hurt", "hurt"},
    {"put", "put", "put"},          {"know", "knew", "known"},
    {"see", "saw", "seen"},         {"say", "said", "said"},
    {"stick", "stuck", "stuck"},    {"swim", "swam", "swum"},
    {"throw", "threw", "thrown"},   {"wake", "woke", "woken"},
    {"bite", "bit", "bitten"},      {"blow", "blew", "blown"},
    {"feed", "fed", "fed"},         {"hide", "hid", "hidden"},
    {"ride", "rode", "ridden"},     {"ring", "rang", "rung"},
    {"sing", "sang", "sung"},       {"sink", "sank", "sunk"},
    {"steal", "stole", "stolen"},   {"strike", "struck", "struck"},
    {"tear", "tore", "torn"},       {"beat", "beat", "beaten"},
    {"bend", "bent", "bent"},       {"bleed", "bled", "bled"},
    {"dig", "dug", "dug"},          {"forgive", "forgave", "forgiven"},
    {"shoot", "shot", "shot"},      {"shut", "shut", "shut"},
    {"slide", "slid", "slid"},      {"spin", "spun", "spun"},
    {"split", "split", "split"},    {"spread", "spread", "spread"},
    {"lend", "lent", "lent"},       {"deal", "dealt", "dealt"},
    {"overcome", "overcame", "overcome"}, {"withstand", "withstood", "withstood"},
    {"upset", "upset", "upset"},    {"cost", "cost", "cost"},
};

inline const IrregularVerb* find_irregular_by_form(std::string_view form) {
  for (const auto& v : kIrregularVerbs) {
    if (v.past == form || v.participle == form) return &v;
  }
  return nullptr;
}

inline const IrregularVerb* find_irregular_by_base(std::string_view base) {
  for (const auto& v : kIrregularVerbs) {
    if (v.base == base) return &v;
  }
  return nullptr;
}

enum class Inflection {
  kNone,
  kPlural,
  kThirdSingular,
  kPast,
  kGerund,
  kComparative,
  kSuperlative,
};

namespace morph_detail {

inline bool is_vowel(char c) {
  c = text::to_lower(c);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline std::size_t vowel_groups(std::string_view w) {
  std::size_t n = 0;
  bool in = false;
  for (char c : w) {
    bool v = is_vowel(c) || (c == 'y' && n > 0);
    if (v && !in) ++n;
    in = v;
  }
  return n;
}

// Monosyllable ending consonant-vowel-consonant, which doubles its final
// consonant before a vowel suffix: stop -> stopped.
inline bool doubles_final(std::string_view w) {
  if (w.size() < 3 || vowel_groups(w) != 1) return false;
  char c3 = w[w.size() - 1];
  char c2 = w[w.size() - 2];
  char c1 = w[w.size() - 3];
  return !is_vowel(c3) && c3 != 'w' && c3 != 'x' && c3 != 'y' &&
         is_vowel(c2) && !is_vowel(c1);
}

// Candidate lemmas for a suffix-stripped form, most likely first.
inline std::vector<std::string> strip_candidates(std::string_view w,
                                                 PosTag pos) {
  std::vector<std::string> out;
  auto add = [&](std::string s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  };
  auto drop = [&](std::size_t n) { return std::string(w.substr(0, w.size() - n)); };
  switch (pos) {
    case PosTag::kNoun:
      if (text::ends_with(w, "ies") && w.size() > 4) add(drop(3) + "y");
      if (text::ends_with(w, "men")) add(drop(3) + "man");
      for (auto suf : {"ses", "xes", "zes", "ches", "shes"}) {
        if (text::ends_with(w, suf)) add(drop(2));
      }
      if (text::ends_with(w, "s") && !text::ends_with(w, "ss")) add(drop(1));
      break;
    case PosTag::kVerb:
      if (text::ends_with(w, "ies") && w.size() > 4) add(drop(3) + "y");
      if (text::ends_with(w, "es")) {
        for (auto suf : {"sses", "xes", "zes", "ches", "shes"}) {
          if (text::ends_with(w, suf)) add(drop(2));
        }
        add(drop(1));
        add(drop(2));
      } else if (text::ends_with(w, "s") && !text::ends_with(w, "ss")) {
        add(drop(1));
      }
      if (text::ends_with(w, "ied") && w.size() > 4) add(drop(3) + "y");
      if (text::ends_with(w, "ed") && w.size() > 3) {
        std::string stem = drop(2);
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            !is_vowel(stem.back()) && stem.back() != 'l' &&
            stem.back() != 's' && stem.back() != 'f' && stem.back() != 'z') {
          add(stem.substr(0, stem.size() - 1));
        }
        add(drop(1));
        add(stem);
      }
      if (text::ends_with(w, "ying") && w.size() > 4) add(drop(4) + "ie");
      if (text::ends_with(w, "ing") && w.size() > 4) {
        std::string stem = drop(3);
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            !is_vowel(stem.back()) && stem.back() != 'l' &&
            stem.back() != 's' && stem.back() != 'f' && stem.back() != 'z') {
          add(stem.substr(0, stem.size() - 1));
        }
        add(stem + "e");
        add(stem);
      }
      break;
    case PosTag::kAdjective:
    case PosTag::kAdverb:
      if (text::ends_with(w, "iest") && w.size() > 5) add(drop(4) + "y");
      if (text::ends_with(w, "ier") && w.size() > 4) add(drop(3) + "y");
      if (text::ends_with(w, "est") && w.size() > 4) {
        add(drop(3));
        add(drop(2));
        std::string stem = drop(3);
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
          add(stem.substr(0, stem.size() - 1));
        }
      }
      if (text::ends_with(w, "er") && w.size() > 3) {
        add(drop(2));
        add(drop(1));
        std::string stem = drop(2);
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
          add(stem.substr(0, stem.size() - 1));
        }
      }
      break;
    case PosTag::kOther:
      break;
  }
  return out;
}

// Lexicon-free guess at a verb lemma, used when nothing validates a
// candidate: "loved" -> "love", "stopped" -> "stop", "changes" -> "change".
inline std::string guess_verb_lemma(std::string_view w) {
  auto ends = [&](std::string_view s) { return text::ends_with(w, s); };
  auto restore_e = [](std::string stem) {
    if (stem.size() < 2) return stem;
    char last = stem.back();
    char prev = stem[stem.size() - 2];
    bool needs_e = last == 'v' || last == 'z' || last == 'u' || last == 'c' ||
                   (last == 'g' && (prev == 'n' || prev == 'r' || prev == 'd')) ||
                   (last == 's' && is_vowel(prev)) ||
                   (stem.size() == 3 && !is_vowel(stem[0]) && is_vowel(prev) &&
                    !is_vowel(last) && last != 'w' && last != 'x' &&
                    last != 'y');
    if (needs_e) stem += 'e';
    return stem;
  };
  auto undouble = [](std::string stem) {
    if (stem.size() >= 3 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back()) && stem.back() != 'l' && stem.back() != 's' &&
        stem.back() != 'f' && stem.back() != 'z') {
      stem.pop_back();
      return std::make_pair(stem, true);
    }
    return std::make_pair(stem, false);
  };
  if (ends("ies") && w.size() > 4) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (ends("ied") && w.size() > 4) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (ends("sses") || ends("xes") || ends("zes") || ends("ches") ||
      ends("shes") || ends("oes")) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (ends("s") && !ends("ss") && !ends("us") && !ends("is") && w.size() > 2) {
    return std::string(w.substr(0, w.size() - 1));
  }
  if (ends("eed")) return std::string(w.substr(0, w.size() - 1));
  if (ends("ed") && w.size() > 3) {
    auto [stem, undoubled] = undouble(std::string(w.substr(0, w.size() - 2)));
    return undoubled ? stem : restore_e(stem);
  }
  if (ends("ing") && w.size() > 4) {
    auto [stem, undoubled] = undouble(std::string(w.substr(0, w.size() - 3)));
    return undoubled ? stem : restore_e(stem);
  }
  return std::string(w);
}

}  // namespace morph_detail

// Lemma of `word` under `pos`. Consults, in order: the irregular verb table,
// the lexicon's exception lists, lemma membership, suffix-stripping
// candidates validated against lemmas or the vocabulary, and finally a
// lexicon-free guess (verbs) or the word itself.
inline std::string lemmatize(std::string_view word, PosTag pos,
                             const AntonymLexicon& lex) {
  std::string w = text::lower(word);
  if (pos == PosTag::kOther) return w;
  if (pos == PosTag::kVerb) {
    if (w == "is" || w == "are" || w == "am" || w == "was" || w == "were" ||
        w == "been" || w == "being") {
      return "be";
    }
    if (w == "has") return "have";
    if (w == "does") return "do";
    if (auto* v = find_irregular_by_form(w)) return std::string(v->base);
  }
  if (auto* lemmas = lex.exception_lemmas(w, pos); lemmas && !lemmas->empty()) {
    return lemmas->front();
  }
  if (lex.has_lemma(w, pos)) return w;
  auto candidates = morph_detail::strip_candidates(w, pos);
  for (const auto& c : candidates) {
    if (lex.has_lemma(c, pos)) return c;
  }
  if (pos == PosTag::kVerb) {
    std::string guess = morph_detail::guess_verb_lemma(w);
    if (guess != w) return guess;
  }
  for (const auto& c : candidates) {
    if (lex.in_vocabulary(c)) return c;
  }
  return w;
}

// Which inflection turns `lemma` into `word` (both lowercase).
inline Inflection detect_inflection(std::string_view word,
                                    std::string_view lemma, PosTag pos) {
  if (word == lemma) return Inflection::kNone;
  switch (pos) {
    case PosTag::kNoun:
      return Inflection::kPlural;
    case PosTag::kVerb:
      if (text::ends_with(word, "ing")) return Inflection::kGerund;
      if (text::ends_with(word, "s") && !text::ends_with(lemma, "s")) {
        return Inflection::kThirdSingular;
      }
      if (word == "has" || word == "does" || word == "is") {
        return Inflection::kThirdSingular;
      }
      return Inflection::kPast;
    case PosTag::kAdjective:
    case PosTag::kAdverb:
      if (text::ends_with(word, "est")) return Inflection::kSuperlative;
      if (text::ends_with(word, "er")) return Inflection::kComparative;
      return Inflection::kNone;
    case PosTag::kOther:
      return Inflection::kNone;
  }
  return Inflection::kNone;
}

// Realizes `lemma` with `inflection`. Irregular forms come from the built-in
// verb table and the lexicon's exception lists; everything else follows
// regular English suffix rules. Multiword lemmas inflect their first word for
// verbs ("give up" -> "gave up") and their last word otherwise.
inline std::string inflect(std::string_view lemma, Inflection inflection,
                           PosTag pos, const AntonymLexicon& lex) {
  using morph_detail::doubles_final;
  using morph_detail::is_vowel;
  std::string l(lemma);
  if (inflection == Inflection::kNone || l.empty()) return l;

  if (auto space = l.find(' '); space != std::string::npos) {
    if (pos == PosTag::kVerb) {
      return inflect(l.substr(0, space), inflection, pos, lex) +
             l.substr(space);
    }
    auto last = l.rfind(' ');
    return l.substr(0, last + 1) +
           inflect(l.substr(last + 1), inflection, pos, lex);
  }

  auto ends = [&](std::string_view s) { return text::ends_with(l, s); };
  auto consonant_y = [&] {
    return l.size() >= 2 && l.back() == 'y' && !is_vowel(l[l.size() - 2]);
  };
  auto from_exceptions = [&](auto&& accept) -> std::optional<std::string> {
    if (auto* forms = lex.exception_forms(l, pos)) {
      for (const auto& f : *forms) {
        if (accept(f)) return f;
      }
    }
    return std::nullopt;
  };

  switch (inflection) {
    case Inflection::kPlural:
    case Inflection::kThirdSingular: {
      if (pos == PosTag::kVerb) {
        if (l == "be") return "is";
        if (l == "have") return "has";
        if (l == "do") return "does";
        if (l == "go") return "goes";
      } else if (auto f = from_exceptions([](const std::string&) { return true; })) {
        return *f;
      }
      if (consonant_y()) return l.substr(0, l.size() - 1) + "ies";
      if (ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh")) {
        return l + "es";
      }
      return l + "s";
    }
    case Inflection::kPast: {
      if (auto* v = find_irregular_by_base(l)) return std::string(v->past);
      if (auto f = from_exceptions(
              [](const std::string& f) { return !text::ends_with(f, "ing"); })) {
        return *f;
      }
      if (ends("e")) return l + "d";
      if (consonant_y()) return l.substr(0, l.size() - 1) + "ied";
      if (doubles_final(l)) return l + l.back() + "ed";
      return l + "ed";
    }
    case Inflection::kGerund: {
      if (ends("ie")) return l.substr(0, l.size() - 2) + "ying";
      if (ends("e") && !ends("ee") && l.size() > 2) {
        return l.substr(0, l.size() - 1) + "ing";
      }
      if (doubles_final(l)) return l + l.back() + "ing";
      return l + "ing";
    }
    case Inflection::kComparative:
    case Inflection::kSuperlative: {
      const bool comparative = inflection == Inflection::kComparative;
      if (auto f = from_exceptions([&](const std::string& f) {
            return comparative ? !text::ends_with(f, "st")
                               : text::ends_with(f, "st");
          })) {
        return *f;
      }
      // Long adjectives take periphrastic comparison.
      if (morph_detail::vowel_groups(l) > 2 ||
          (morph_detail::vowel_groups(l) == 2 && !consonant_y() &&
           !ends("le") && !ends("er") && !ends("ow"))) {
        return std::string(comparative ? "more " : "most ") + l;
      }
      std::string suffix = comparative ? "er" : "est";
      if (ends("e")) return l + suffix.substr(1);
      if (consonant_y()) return l.substr(0, l.size() - 1) + "i" + suffix;
      if (doubles_final(l)) return l + l.back() + suffix;
      return l + suffix;
    }
    case Inflection::kNone:
      break;
  }
  return l;
}

// Renders `replacement_lemma` in the inflection and letter case of the
// surface token it replaces.
inline std::string realize_like(std::string_view original_surface,
                                std::string_view replacement_lemma, PosTag pos,
                                const AntonymLexicon& lex) {
  std::string lower = text::lower(original_surface);
  std::string lemma = lemmatize(lower, pos, lex);
  Inflection infl = detect_inflection(lower, lemma, pos);
  return text::match_case(original_surface,
                          inflect(replacement_lemma, infl, pos, lex));
}

}  // namespace arts

#endif  // ARTS_LEXICON_MORPHOLOGY_HPP_

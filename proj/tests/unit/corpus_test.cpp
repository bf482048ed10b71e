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

#include "arts/corpus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace arts {
namespace {

constexpr char kTable1Xml[] = R"(<?xml version="1.0" encoding="UTF-8"?>
<sentences>
  <sentence id="s1">
    <text>Tasty burgers, and crispy fries.</text>
    <aspectTerms>
      <aspectTerm term="burgers" polarity="positive" from="6" to="13"/>
      <aspectTerm term="fries" polarity="positive" from="26" to="31"/>
    </aspectTerms>
  </sentence>
</sentences>
)";

constexpr char kTable1Jsonl[] =
    R"({"id":"s1","text":"Tasty burgers, and crispy fries.","aspects":[)"
    R"({"aspect_id":"a1","term":"burgers","from":6,"to":13,"polarity":"positive"},)"
    R"({"aspect_id":"a2","term":"fries","from":26,"to":31,"polarity":"positive"}]})"
    "\n";

// Independent oracle: every start offset at which `needle` occurs.
std::vector<std::size_t> brute_force_occurrences(const std::string& hay,
                                                 const std::string& needle) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (hay[i + j] != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(i);
  }
  return out;
}

TEST(ParseSemevalXml, Table1Sentence) {
  Dataset ds = parse_semeval_xml(kTable1Xml, "restaurant", Split::kTest);
  ASSERT_EQ(ds.sentences.size(), 1u);
  const Sentence& s = ds.sentences[0];
  EXPECT_EQ(s.sentence_id, "s1");
  EXPECT_EQ(s.text, "Tasty burgers, and crispy fries.");
  ASSERT_EQ(s.aspects.size(), 2u);
  EXPECT_EQ(s.aspects[0].aspect_id, "a1");
  EXPECT_EQ(s.aspects[0].term, "burgers");
  EXPECT_EQ(s.aspects[0].term_span, (Span{6, 13}));
  EXPECT_EQ(s.aspects[0].polarity, Polarity::kPositive);
  EXPECT_TRUE(s.aspects[0].opinions.empty());
  EXPECT_EQ(ds.instance_count(), 2u);
}

TEST(ParseSemevalXml, EmptySentenceList) {
  Dataset ds = parse_semeval_xml("<sentences></sentences>");
  EXPECT_TRUE(ds.sentences.empty());
  EXPECT_TRUE(parse_semeval_xml("<sentences/>").sentences.empty());
}

TEST(ParseSemevalXml, RederivesUniqueMisplacedOffset) {
  const std::string text = "The battery life is great but the screen is dim.";
  const std::string xml = R"(<sentences><sentence id="7"><text>)" + text +
                          R"(</text><aspectTerms>)"
                          R"(<aspectTerm term="screen" polarity="negative" from="33" to="39"/>)"
                          R"(</aspectTerms></sentence></sentences>)";
  auto hits = brute_force_occurrences(text, "screen");
  ASSERT_EQ(hits.size(), 1u);

  ParseDiagnostics diag;
  Dataset ds = parse_semeval_xml(xml, "laptop", Split::kTest, &diag);
  const auto& a = ds.sentences.at(0).aspects.at(0);
  EXPECT_EQ(a.term_span, (Span{hits[0], hits[0] + 6}));
  EXPECT_EQ(a.term_span.slice(ds.sentences[0].text), "screen");
  ASSERT_EQ(diag.rederived.size(), 1u);
  EXPECT_EQ(diag.rederived[0].annotated, (Span{33, 39}));
}

TEST(ParseSemevalXml, AmbiguousMismatchFailsNamingSentence) {
  const std::string xml =
      R"(<sentences><sentence id="bad-1"><text>good food, bad food</text>)"
      R"(<aspectTerms><aspectTerm term="food" polarity="positive" from="0" to="4"/>)"
      R"(</aspectTerms></sentence></sentences>)";
  try {
    parse_semeval_xml(xml);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("bad-1"), std::string::npos);
  }
}

TEST(ParseSemevalXml, MalformedReportsLineAndColumn) {
  const std::string xml = "<sentences>\n  <sentence id=\"1\">\n    <text>x</txt>\n";
  try {
    parse_semeval_xml(xml);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(ParseSemevalXml, ConflictCapturedNotStored) {
  const std::string xml =
      R"(<sentences><sentence id="1"><text>cheap but slow laptop</text><aspectTerms>)"
      R"(<aspectTerm term="laptop" polarity="conflict" from="15" to="21"/>)"
      R"(</aspectTerms></sentence></sentences>)";
  Dataset ds = parse_semeval_xml(xml);
  ASSERT_EQ(ds.sentences.size(), 1u);
  EXPECT_TRUE(ds.sentences[0].aspects.empty());
  ASSERT_EQ(ds.conflicts.size(), 1u);
  EXPECT_EQ(ds.conflicts[0].term, "laptop");
}

TEST(ParseJsonl, EquivalentToXml) {
  Dataset from_xml = parse_semeval_xml(kTable1Xml, "restaurant");
  Dataset from_jsonl = parse_jsonl(kTable1Jsonl, "restaurant");
  EXPECT_EQ(from_xml, from_jsonl);
}

TEST(ParseJsonl, MissingPolarityNamesLine) {
  std::string input = std::string(kTable1Jsonl) +
                      R"({"id":"s2","text":"ok","aspects":[{"aspect_id":"a1","term":"ok","from":0,"to":2}]})"
                      "\n";
  try {
    parse_jsonl(input);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("polarity"), std::string::npos);
  }
}

TEST(ParseJsonl, CountsEveryLine) {
  std::string input;
  for (int i = 0; i < 1120; ++i) {
    input += R"({"id":"r)" + std::to_string(i) +
             R"(","text":"nice staff","aspects":[{"aspect_id":"a1","term":"staff","from":5,"to":10,"polarity":"positive"}]})"
             "\n";
  }
  EXPECT_EQ(parse_jsonl(input).sentences.size(), 1120u);
}

TEST(AttachOpinions, AddsTastyToBurgers) {
  Dataset ds = parse_semeval_xml(kTable1Xml);
  Dataset out = attach_opinions(ds, "s1\ta1\t0\t5\tpositive\n");
  const auto& a1 = out.sentences[0].aspects[0];
  ASSERT_EQ(a1.opinions.size(), 1u);
  EXPECT_EQ(a1.opinions[0].span, (Span{0, 5}));
  EXPECT_EQ(a1.opinions[0].span.slice(out.sentences[0].text), "Tasty");
  EXPECT_TRUE(out.sentences[0].aspects[1].opinions.empty());
}

TEST(AttachOpinions, EmptyStreamIsNoOp) {
  Dataset ds = parse_semeval_xml(kTable1Xml);
  EXPECT_EQ(attach_opinions(ds, ""), ds);
}

TEST(AttachOpinions, DanglingReferenceListsKeys) {
  Dataset ds = parse_semeval_xml(kTable1Xml);
  try {
    attach_opinions(ds, "s9\ta1\t0\t5\tpositive\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("s9/a1"), std::string::npos);
  }
}

TEST(AttachOpinions, OverlappingSpansRejected) {
  Dataset ds = parse_semeval_xml(kTable1Xml);
  EXPECT_THROW(attach_opinions(ds,
                               "s1\ta1\t0\t5\tpositive\n"
                               "s1\ta1\t2\t4\tpositive\n"),
               ValidationError);
}

TEST(AttachOpinions, CoverageMatchesAnnotatedAspects) {
  // 10 sentences, two aspects each, annotate only the first aspect of even
  // sentences: exactly 5 aspects end up with opinions.
  std::string jsonl;
  std::string tsv;
  for (int i = 0; i < 10; ++i) {
    jsonl += R"({"id":"s)" + std::to_string(i) +
             R"(","text":"great food and cold tea","aspects":[)"
             R"({"aspect_id":"a1","term":"food","from":6,"to":10,"polarity":"positive"},)"
             R"({"aspect_id":"a2","term":"tea","from":20,"to":23,"polarity":"negative"}]})"
             "\n";
    if (i % 2 == 0) tsv += "s" + std::to_string(i) + "\ta1\t0\t5\tpositive\n";
  }
  Dataset out = attach_opinions(parse_jsonl(jsonl), tsv);
  std::size_t with = 0;
  for (const auto& s : out.sentences)
    for (const auto& a : s.aspects) with += a.opinions.empty() ? 0 : 1;
  EXPECT_EQ(with, 5u);
}

TEST(FilterConflicts, Rules) {
  const std::string xml =
      R"(<sentences>)"
      R"(<sentence id="1"><text>good screen, odd keys</text><aspectTerms>)"
      R"(<aspectTerm term="screen" polarity="positive" from="5" to="11"/>)"
      R"(<aspectTerm term="keys" polarity="conflict" from="17" to="21"/>)"
      R"(</aspectTerms></sentence>)"
      R"(<sentence id="2"><text>the price</text><aspectTerms>)"
      R"(<aspectTerm term="price" polarity="conflict" from="4" to="9"/>)"
      R"(</aspectTerms></sentence>)"
      R"(<sentence id="3"><text>no aspects here</text></sentence>)"
      R"(</sentences>)";
  auto [out, removed] = filter_conflicts(parse_semeval_xml(xml));
  ASSERT_EQ(out.sentences.size(), 2u);
  EXPECT_EQ(out.sentences[0].aspects.size(), 1u);
  EXPECT_EQ(out.sentences[1].sentence_id, "3");
  EXPECT_EQ(removed.aspects, 2u);
  EXPECT_EQ(removed.sentences, 1u);
  EXPECT_TRUE(out.conflicts.empty());

  auto [again, removed_again] = filter_conflicts(out);
  EXPECT_EQ(again, out);
  EXPECT_EQ(removed_again.total(), 0u);
}

TEST(FilterConflicts, NoConflictsIsIdentity) {
  Dataset ds = parse_semeval_xml(kTable1Xml);
  auto [out, removed] = filter_conflicts(ds);
  EXPECT_EQ(out, ds);
  EXPECT_EQ(removed.total(), 0u);
}

TEST(Serialize, EmptyDatasetIsValidDocument) {
  Dataset empty;
  EXPECT_TRUE(parse(serialize(empty, CorpusFormat::kXml), CorpusFormat::kXml)
                  .sentences.empty());
  EXPECT_EQ(serialize(empty, CorpusFormat::kJsonl), "");
  EXPECT_TRUE(parse_jsonl("").sentences.empty());
}

TEST(Serialize, JsonlThroughXmlIsByteIdentical) {
  Dataset ds = attach_opinions(parse_jsonl(kTable1Jsonl),
                               "s1\ta1\t0\t5\tpositive\n");
  std::string j1 = serialize_jsonl(ds);
  std::string j2 = serialize_jsonl(parse_semeval_xml(serialize_xml(ds)));
  EXPECT_EQ(j1, j2);
}

// Random datasets with awkward characters, opinions and conflicts.
Dataset random_dataset(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {
      "good", "bad", "food", "R&D", "\"quoted\"", "<tag>", "it's", "café",
      "GREAT", "x", "fries", "service"};
  std::uniform_int_distribution<int> nsent(0, 6);
  std::uniform_int_distribution<int> nword(1, 9);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  Dataset ds;
  int sentences = nsent(rng);
  for (int i = 0; i < sentences; ++i) {
    Sentence s;
    s.sentence_id = "id" + std::to_string(i) + ":" + std::to_string(rng() % 7);
    std::vector<Span> spans;
    int n = nword(rng);
    for (int w = 0; w < n; ++w) {
      if (w) s.text += ' ';
      std::size_t start = s.text.size();
      s.text += words[pick(rng)];
      spans.push_back({start, s.text.size()});
    }
    std::size_t aspect_no = 0;
    for (std::size_t w = 0; w + 1 < spans.size(); w += 2) {
      if (rng() % 2) continue;
      AspectInstance a;
      a.aspect_id = "a" + std::to_string(++aspect_no);
      a.term_span = spans[w];
      a.term = std::string(spans[w].slice(s.text));
      if (rng() % 5 == 0) {
        ds.conflicts.push_back({s.sentence_id, a.aspect_id, a.term, a.term_span});
        continue;
      }
      a.polarity = static_cast<Polarity>(rng() % 3);
      if (rng() % 2) a.opinions.push_back({spans[w + 1], a.polarity});
      s.aspects.push_back(a);
    }
    ds.sentences.push_back(s);
  }
  return ds;
}

TEST(Serialize, RoundTripProperty) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    Dataset ds = random_dataset(rng);
    for (auto fmt : {CorpusFormat::kXml, CorpusFormat::kJsonl}) {
      Dataset back = parse(serialize(ds, fmt), fmt);
      // Conflict records come back grouped by sentence, which is how
      // random_dataset emits them.
      ASSERT_EQ(back, ds) << serialize(ds, fmt);
      for (const auto& s : back.sentences)
        for (const auto& a : s.aspects)
          ASSERT_EQ(a.term_span.slice(s.text), a.term);
    }
  }
}

// Oracle for tokenize: classify each byte, then group.
std::vector<std::string> char_class_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto word = [](char c) {
    return static_cast<unsigned char>(c) >= 0x80 ||
           std::isalnum(static_cast<unsigned char>(c));
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (word(c)) {
      cur += c;
    } else if (c == '\'' && !cur.empty() && i + 1 < s.size() && word(s[i + 1])) {
      cur += c;
    } else {
      if (!cur.empty()) out.push_back(cur), cur.clear();
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

TEST(Tokenize, Table1Sentence) {
  const std::string s = "Tasty burgers, and crispy fries.";
  auto toks = tokenize(s);
  std::vector<std::string> texts;
  for (const auto& t : toks) texts.push_back(t.text);
  EXPECT_EQ(texts, char_class_tokens(s));
  EXPECT_EQ(texts, (std::vector<std::string>{"Tasty", "burgers", ",", "and",
                                             "crispy", "fries", "."}));
  EXPECT_EQ(toks[2].span, (Span{13, 14}));
  EXPECT_EQ(toks[6].span, (Span{31, 32}));
}

TEST(Tokenize, EmptyAndApostrophe) {
  EXPECT_TRUE(tokenize("").empty());
  auto toks = tokenize("don't");
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0].text, "don't");
  EXPECT_EQ(tokenize("'quoted'").size(), 3u);
}

TEST(Tokenize, LosslessProperty) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "ab Z9'.,!-  \t\n\xc3\xa9";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    auto toks = tokenize(s);
    std::vector<std::string> texts;
    std::size_t prev_end = 0;
    std::string rebuilt;
    for (const auto& t : toks) {
      texts.push_back(t.text);
      ASSERT_GE(t.span.start, prev_end);
      ASSERT_LT(t.span.start, t.span.end);
      ASSERT_EQ(t.span.slice(s), t.text);
      for (std::size_t i = prev_end; i < t.span.start; ++i) {
        ASSERT_TRUE(std::isspace(static_cast<unsigned char>(s[i])));
      }
      rebuilt += s.substr(prev_end, t.span.start - prev_end) + t.text;
      prev_end = t.span.end;
    }
    rebuilt += s.substr(prev_end);
    for (std::size_t i = prev_end; i < s.size(); ++i) {
      ASSERT_TRUE(std::isspace(static_cast<unsigned char>(s[i])));
    }
    ASSERT_EQ(rebuilt, s);
    ASSERT_EQ(texts, char_class_tokens(s));
  }
}

}  // namespace
}  // namespace arts

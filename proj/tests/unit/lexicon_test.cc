// tests/unit/lexicon_test.cc

// Copyright 2026  The ugcbench Authors

// See ../../LICENSE for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ugcbench/lexicon.h"

#include <gtest/gtest.h>

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

std::vector<std::string> Spans(const Lexicon &lex, const std::string &text) {
  const auto u = DecodeUtf8(text);
  std::vector<std::string> out;
  for (const auto &m : lex.FindMatches(u))
    out.push_back(EncodeUtf8(std::u32string_view(u).substr(m.begin, m.end - m.begin)) + "=>" +
                  EncodeUtf8(*m.replacement));
  return out;
}

TEST(LexiconTest, ParsesTsv) {
  const auto lex = ParseLexicon("I am\tI'm\nyou are\tyou're\n", "cont");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_TRUE(ParseLexicon("", "x").empty());
  EXPECT_TRUE(ParseLexicon("# comment only\n\n", "x").empty());
}

TEST(LexiconTest, DuplicateRejectedWithLineAndPhrase) {
  try {
    ParseLexicon("btw\tby the way\nlol\tlaughing\nbtw\tbetween\n", "abr2");
    FAIL();
  } catch (const ValidationError &e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("line 3"), std::string::npos) << what;
    EXPECT_NE(what.find("btw"), std::string::npos) << what;
  }
}

TEST(LexiconTest, MalformedLineReportsLineNumber) {
  try {
    ParseLexicon("a\tb\nno tab here\n", "x");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(LexiconTest, LeftmostLongestOnTokenBoundaries) {
  Lexicon lex("t", LexiconDirection::kOneWay);
  lex.Add("as soon", "AS");
  lex.Add("as soon as possible", "ASAP");
  lex.Add("to", "2");
  const std::vector<std::string> want = {"As soon as possible=>ASAP", "to=>2"};
  EXPECT_EQ(Spans(lex, "As soon as possible, go to town"), want);
  EXPECT_TRUE(Spans(lex, "tomato potato").empty());
}

TEST(LexiconTest, ApostropheIsPartOfWord) {
  Lexicon lex("t", LexiconDirection::kOneWay);
  lex.Add("don", "X");
  EXPECT_TRUE(Spans(lex, "I don't know").empty());
}

TEST(LexiconTest, SwapBothWaysAddsReverse) {
  Lexicon lex("cont", LexiconDirection::kSwapBothWays);
  lex.Add("I am", "I'm");
  const std::vector<std::string> fwd = {"I am=>I'm"};
  const std::vector<std::string> rev = {"I'm=>I am"};
  EXPECT_EQ(Spans(lex, "I am here"), fwd);
  EXPECT_EQ(Spans(lex, "I'm here"), rev);
}

TEST(LexiconTest, ForwardEntryBeatsReverse) {
  Lexicon lex("homo", LexiconDirection::kSwapBothWays);
  lex.Add("there", "their");
  lex.Add("their", "they're");
  const std::vector<std::string> want = {"their=>they're"};
  EXPECT_EQ(Spans(lex, "their"), want);
}

}  // namespace
}  // namespace ugcbench

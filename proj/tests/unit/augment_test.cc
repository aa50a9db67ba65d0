// tests/unit/augment_test.cc

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

#include "ugcbench/augment.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "synthetic_corpus.h"
#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

const AugmentResources &Resources() {
  static const AugmentResources r = AugmentResources::Load(testing::DataDir());
  return r;
}

std::string NonSpace(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  std::sort(out.begin(), out.end());
  return out;
}

TEST(TransformIdTest, NamesRoundTrip) {
  for (auto id : AllTransforms()) EXPECT_EQ(ParseTransformId(TransformName(id)), id);
  EXPECT_FALSE(ParseTransformId("mix_all").has_value());
  EXPECT_NE(ValidTransformNames().find("week"), std::string::npos);
}

TEST(TransformSpecTest, DefaultsMatchPublishedValues) {
  EXPECT_DOUBLE_EQ(*DefaultSpec(TransformId::kAbr1).p, 0.1);
  EXPECT_DOUBLE_EQ(*DefaultSpec(TransformId::kFing).p, 0.05);
  EXPECT_DOUBLE_EQ(*DefaultSpec(TransformId::kHomo).p, 0.5);
  EXPECT_DOUBLE_EQ(*DefaultSpec(TransformId::kLeet).p, 0.1);
  EXPECT_DOUBLE_EQ(*DefaultSpec(TransformId::kSpel).p, 0.2);
  EXPECT_DOUBLE_EQ(DefaultSpec(TransformId::kSpac).p_add, 0.05);
  EXPECT_DOUBLE_EQ(DefaultSpec(TransformId::kSpac).p_remove, 0.1);
  for (auto id : {TransformId::kAbr2, TransformId::kAbr3, TransformId::kCont, TransformId::kDysl,
                  TransformId::kSlng, TransformId::kWeek})
    EXPECT_FALSE(DefaultSpec(id).p.has_value()) << TransformName(id);
}

TEST(ApplyLexicalTest, PublishedExamples) {
  RandomStream rng(1, 1);
  EXPECT_EQ(ApplyLexical("I am here", Resources().lexicon(TransformId::kCont), 1.0, rng),
            "I'm here");
  EXPECT_EQ(ApplyLexical("Monday", Resources().lexicon(TransformId::kWeek), 1.0, rng), "Mon.");
  EXPECT_EQ(ApplyLexical("there is hope", Resources().lexicon(TransformId::kHomo), 1.0, rng),
            "their is hope");
}

TEST(ApplyLexicalTest, SwapsBackForBothWayLexicons) {
  RandomStream rng(1, 1);
  EXPECT_EQ(ApplyLexical("I'm here", Resources().lexicon(TransformId::kCont), std::nullopt, rng),
            "I am here");
  EXPECT_EQ(ApplyLexical("Mon.", Resources().lexicon(TransformId::kWeek), std::nullopt, rng),
            "Monday");
}

TEST(ApplyLexicalTest, ZeroProbabilityIsIdentity) {
  RandomStream rng(2, 2);
  for (const auto &s : testing::SyntheticSentences(200, 3))
    for (auto id : AllTransforms()) {
      if (IsLexical(id)) {
        EXPECT_EQ(ApplyLexical(s, Resources().lexicon(id), 0.0, rng), s);
      }
    }
}

TEST(ApplyLexicalTest, PreservesFirstLetterCase) {
  Lexicon lex("t", LexiconDirection::kOneWay);
  lex.Add("you", "u");
  RandomStream rng(1, 1);
  EXPECT_EQ(ApplyLexical("You and you", lex, std::nullopt, rng), "U and u");
}

TEST(ApplyLexicalTest, TextOutsideMatchesUntouched) {
  Lexicon lex("t", LexiconDirection::kOneWay);
  lex.Add("cat", "dog");
  RandomStream rng(1, 1);
  EXPECT_EQ(ApplyLexical("  a cat,  a  cathedral\t", lex, std::nullopt, rng),
            "  a dog,  a  cathedral\t");
}

TEST(ButterFingersTest, NeighboursAndLength) {
  RandomStream rng(5, 5);
  const auto out = ButterFingers("aaaa", 1.0, QwertyNeighbors(), rng);
  ASSERT_EQ(out.size(), 4u);
  for (char c : out) EXPECT_NE(std::string("qswz").find(c), std::string::npos) << out;
  EXPECT_NE(QwertyNeighbors().at(U'e').find(U'w'), std::u32string::npos);
}

TEST(ButterFingersTest, IdentityAndCharacterCount) {
  RandomStream rng(6, 6);
  for (const auto &s : testing::SyntheticSentences(100, 4)) {
    EXPECT_EQ(ButterFingers(s, 0.0, QwertyNeighbors(), rng), s);
    const auto out = ButterFingers(s, 0.3, QwertyNeighbors(), rng);
    EXPECT_EQ(DecodeUtf8(out).size(), DecodeUtf8(s).size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (!IsAsciiAlpha(static_cast<unsigned char>(s[i]))) {
        EXPECT_EQ(out[i], s[i]);
      }
    }
  }
}

TEST(ButterFingersTest, CanProduceTableOneTypo) {
  bool seen = false;
  for (uint64_t seed = 0; seed < 2000 && !seen; ++seed) {
    RandomStream rng(seed, 0);
    seen = ButterFingers("tried", 0.3, QwertyNeighbors(), rng) == "triwd";
  }
  EXPECT_TRUE(seen);
}

TEST(LeetTest, SingleGlyphMapForcesOutput) {
  CharMap map = {{U'e', U"3"}};
  RandomStream rng(1, 2);
  EXPECT_EQ(Leet("ee", 1.0, map, rng), "33");
}

TEST(LeetTest, LoveShape) {
  RandomStream rng(3, 3);
  const auto out = DecodeUtf8(Leet("love", 1.0, DefaultLeetMap(), rng));
  ASSERT_EQ(out.size(), 4u);
  const std::u32string orig = U"love";
  for (size_t i = 0; i < 4; ++i) {
    const auto &glyphs = DefaultLeetMap().at(orig[i]);
    EXPECT_NE(glyphs.find(out[i]), std::u32string::npos);
  }
  bool seen = false;
  for (uint64_t seed = 0; seed < 5000 && !seen; ++seed) {
    RandomStream r(seed, 1);
    seen = Leet("love", 0.75, DefaultLeetMap(), r) == "l0V3";
  }
  EXPECT_TRUE(seen);
}

TEST(LeetTest, IdentityAndCharacterCount) {
  RandomStream rng(4, 4);
  for (const auto &s : testing::SyntheticSentences(100, 5)) {
    EXPECT_EQ(Leet(s, 0.0, DefaultLeetMap(), rng), s);
    EXPECT_EQ(DecodeUtf8(Leet(s, 0.5, DefaultLeetMap(), rng)).size(), DecodeUtf8(s).size());
  }
}

TEST(WhitespaceTest, ForcedCases) {
  RandomStream rng(1, 1);
  EXPECT_EQ(WhitespacePerturb("a b", 0.0, 1.0, rng), "ab");
  EXPECT_EQ(WhitespacePerturb("ab", 1.0, 0.0, rng), "a b");
  EXPECT_EQ(WhitespacePerturb("a b c", 0.0, 0.0, rng), "a b c");
}

TEST(WhitespaceTest, PreservesNonSpaceMultisetAndEdges) {
  RandomStream rng(2, 2);
  for (const auto &s : testing::SyntheticSentences(300, 6)) {
    const auto out = WhitespacePerturb(s, 0.3, 0.3, rng);
    EXPECT_EQ(NonSpace(out), NonSpace(s));
    ASSERT_FALSE(out.empty());
    EXPECT_NE(out.front(), ' ');
    EXPECT_NE(out.back(), ' ');
  }
}

TEST(ScaleProbabilityTest, ValuesAndFrequencies) {
  RandomStream rng(8, 8);
  for (int i = 0; i < 100; ++i) {
    const double p = ScaleProbability(0.1, rng);
    EXPECT_TRUE(p == 0.05 || p == 0.1 || std::abs(p - 0.15) < 1e-15) << p;
    EXPECT_EQ(ScaleProbability(0.0, rng), 0.0);
  }
  EXPECT_EQ(ScaleProbability(0.9, rng) <= 1.0, true);
  std::map<double, int> counts;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) ++counts[ScaleProbability(0.2, rng)];
  ASSERT_EQ(counts.size(), 3u);
  auto it = counts.begin();
  EXPECT_NEAR(it->second / double(n), 0.25, 0.005);
  EXPECT_NEAR((++it)->second / double(n), 0.5, 0.005);
  EXPECT_NEAR((++it)->second / double(n), 0.25, 0.005);
}

TEST(MixAllTest, ZeroPAllIsIdentity) {
  MixAllConfig config;
  config.p_all = 0.0;
  RandomStream rng(1, 1);
  for (const auto &s : testing::SyntheticSentences(100, 7)) {
    const auto pair = MixAll(s, config, Resources(), rng);
    EXPECT_EQ(pair.ugc, s);
    EXPECT_TRUE(pair.applied.empty());
  }
}

TEST(MixAllTest, AppliedListIsSoundAndReplays) {
  MixAllConfig config;
  config.p_all = 0.4;
  for (const auto &[i, s] : [] {
         std::vector<std::pair<size_t, std::string>> v;
         auto sents = testing::SyntheticSentences(500, 8);
         for (size_t i = 0; i < sents.size(); ++i) v.emplace_back(i, sents[i]);
         return v;
       }()) {
    auto rng = RandomStream::Derive(99, i);
    const auto plan = PlanMixAll(config, rng);
    const auto pair = ExecutePlan(s, plan, Resources());
    EXPECT_LE(pair.applied.size(), kNumTransforms);
    std::set<TransformId> unique(pair.applied.begin(), pair.applied.end());
    EXPECT_EQ(unique.size(), pair.applied.size());
    if (pair.applied.empty()) {
      EXPECT_EQ(pair.ugc, s);
    }
    EXPECT_EQ(ReplayApplied(s, plan, pair.applied, Resources()), pair.ugc);
    for (auto id : pair.applied)
      EXPECT_TRUE(std::any_of(plan.steps.begin(), plan.steps.end(),
                              [&](const TransformSpec &t) { return t.id == id; }));
  }
}

TEST(MixAllTest, ScaledProbabilitiesComeFromTheThreeChoices) {
  MixAllConfig config;
  config.p_all = 1.0;
  RandomStream rng(5, 5);
  for (int i = 0; i < 200; ++i) {
    const auto plan = PlanMixAll(config, rng);
    ASSERT_EQ(plan.steps.size(), kNumTransforms);
    for (const auto &step : plan.steps) {
      const auto base = DefaultSpec(step.id);
      if (!base.p) continue;
      const double r = *step.p / *base.p;
      EXPECT_TRUE(std::abs(r - 0.5) < 1e-12 || std::abs(r - 1.0) < 1e-12 ||
                  std::abs(r - 1.5) < 1e-12)
          << r;
    }
  }
}

TEST(MixAllTest, OrderIsShuffled) {
  MixAllConfig config;
  config.p_all = 1.0;
  RandomStream rng(6, 6);
  std::set<std::vector<TransformId>> orders;
  for (int i = 0; i < 50; ++i) {
    std::vector<TransformId> order;
    for (const auto &s : PlanMixAll(config, rng).steps) order.push_back(s.id);
    orders.insert(order);
  }
  EXPECT_GT(orders.size(), 45u);
}

TEST(MixAllConfigTest, Validation) {
  MixAllConfig config;
  config.p_all = 1.5;
  EXPECT_THROW(config.Validate(), ValidationError);
  config.p_all = 0.1;
  config.scale_probs = {0.3, 0.3, 0.3};
  EXPECT_THROW(config.Validate(), ValidationError);
}

TEST(AugmentCorpusTest, ChunkCounts) {
  EXPECT_EQ(NumChunks(2000000, 20000), 100u);
  EXPECT_EQ(NumChunks(1, 20000), 1u);
  EXPECT_EQ(NumChunks(0, 20000), 0u);
}

TEST(AugmentCorpusTest, ParallelMatchesSerialAndKeepsOrder) {
  const auto corpus = testing::SyntheticSentences(3000, 9);
  MixAllConfig config;
  config.global_seed = 77;
  const auto serial = AugmentCorpusSerial(corpus, config, Resources(), 256);
  for (int threads : {1, 3, 8}) {
    const auto par = AugmentCorpus(corpus, config, Resources(), 256, threads);
    ASSERT_EQ(par.size(), serial.size());
    for (size_t i = 0; i < par.size(); ++i) {
      EXPECT_EQ(par[i].std, corpus[i]);
      EXPECT_EQ(par[i].ugc, serial[i].ugc);
      EXPECT_EQ(par[i].applied, serial[i].applied);
    }
  }
}

TEST(AugmentCorpusTest, EmptyCorpusGivesEmptyOutput) {
  std::vector<std::string> none;
  EXPECT_TRUE(AugmentCorpus(none, MixAllConfig{}, Resources(), 10).empty());
  EXPECT_THROW(AugmentCorpus(none, MixAllConfig{}, Resources(), 0), ValidationError);
}

TEST(AugmentCorpusTest, SeedChangesOutput) {
  const auto corpus = testing::SyntheticSentences(1000, 10);
  MixAllConfig a, b;
  a.global_seed = 1;
  b.global_seed = 2;
  const auto pa = AugmentCorpus(corpus, a, Resources(), 100);
  const auto pb = AugmentCorpus(corpus, b, Resources(), 100);
  size_t differ = 0;
  for (size_t i = 0; i < pa.size(); ++i) differ += pa[i].ugc != pb[i].ugc;
  EXPECT_GT(differ, 100u);
}

TEST(AugmentCorpusTest, FixedTransformRunsApplyOnlyThatType) {
  const auto corpus = testing::SyntheticSentences(300, 11);
  const std::vector<TransformSpec> steps = {DefaultSpec(TransformId::kCont)};
  const auto pairs = AugmentCorpusFixed(corpus, steps, 3, Resources(), 100);
  size_t changed = 0;
  for (const auto &p : pairs) {
    for (auto id : p.applied) EXPECT_EQ(id, TransformId::kCont);
    changed += !p.applied.empty();
  }
  EXPECT_GT(changed, 0u);
}

TEST(ManifestTest, LineFormat) {
  const std::vector<TransformId> ids = {TransformId::kAbr2, TransformId::kFing};
  EXPECT_EQ(FormatManifestLine(4, ids), "4\tabr2,fing");
  EXPECT_EQ(FormatManifestLine(0, {}), "0\t");
}

}  // namespace
}  // namespace ugcbench

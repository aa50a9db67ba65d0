// tests/unit/metrics_test.cc

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

#include "ugcbench/metrics.h"

#include <cmath>

#include <gtest/gtest.h>

#include "synthetic_corpus.h"
#include "ugcbench/error.h"

namespace ugcbench {
namespace {

TEST(CosineDistanceTest, BasicCases) {
  const std::vector<double> u = {1, 2, 3}, neg = {-1, -2, -3}, scaled = {2, 4, 6};
  EXPECT_NEAR(CosineDistance(u, u), 0.0, 1e-15);
  EXPECT_NEAR(CosineDistance(u, neg), 2.0, 1e-15);
  EXPECT_NEAR(CosineDistance(u, scaled), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(CosineDistance(std::vector<double>{1, 0}, std::vector<double>{0, 1}), 1.0);
}

TEST(CosineDistanceTest, ZeroNormIsDegenerate) {
  const std::vector<double> z = {0, 0}, u = {1, 0};
  EXPECT_THROW(CosineDistance(z, u), DegenerateInputError);
}

TEST(CosineDistanceTest, SymmetricAndInRange) {
  const auto m = testing::RandomMatrix(200, 7, 3);
  for (size_t i = 0; i + 1 < m.rows(); ++i) {
    const double d = CosineDistance(m.row(i), m.row(i + 1));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 2.0);
    EXPECT_EQ(d, CosineDistance(m.row(i + 1), m.row(i)));
  }
}

TEST(AvgPairwiseCosineDistanceTest, HandCases) {
  const auto a = EmbeddingMatrix::FromRows({{1, 0}, {0, 1}});
  const auto b = EmbeddingMatrix::FromRows({{1, 0}, {0, -1}});
  EXPECT_DOUBLE_EQ(AvgPairwiseCosineDistance(a, b), 1.0);
  EXPECT_NEAR(AvgPairwiseCosineDistance(a, a), 0.0, 1e-15);
  const auto c = EmbeddingMatrix::FromRows({{1, 0}});
  EXPECT_THROW(AvgPairwiseCosineDistance(a, c), ValidationError);
}

TEST(AvgPairwiseCosineDistanceTest, ThreadCountDoesNotMatter) {
  const auto a = testing::RandomMatrix(1000, 16, 1);
  const auto b = testing::RandomMatrix(1000, 16, 2);
  const double one = AvgPairwiseCosineDistance(a, b, 1);
  EXPECT_EQ(one, AvgPairwiseCosineDistance(a, b, 4));
  EXPECT_EQ(one, AvgPairwiseCosineDistance(a, b, 8));
}

TEST(TtrTest, HandCounts) {
  const std::vector<std::string> c1 = {"a b a"};
  const auto s = ComputeTtr(c1);
  EXPECT_EQ(s.n_tokens, 3u);
  EXPECT_EQ(s.n_types, 2u);
  EXPECT_NEAR(s.ttr, 2.0 / 3.0, 1e-15);
  const std::vector<std::string> c2 = {"x"};
  EXPECT_DOUBLE_EQ(ComputeTtr(c2).ttr, 1.0);
  EXPECT_THROW(ComputeTtr(std::vector<std::string>{}), ValidationError);
}

TEST(TtrTest, RatioAndOrderInvariance) {
  const std::vector<std::string> ugc = {"a b"}, std_side = {"a a a b"};
  EXPECT_DOUBLE_EQ(TtrRatio(ComputeTtr(ugc), ComputeTtr(std_side)), 2.0);
  EXPECT_DOUBLE_EQ(TtrRatio(ComputeTtr(ugc), ComputeTtr(ugc)), 1.0);
  auto corpus = testing::SyntheticSentences(300, 1);
  const auto before = ComputeTtr(corpus);
  std::reverse(corpus.begin(), corpus.end());
  const auto after = ComputeTtr(corpus);
  EXPECT_EQ(before.n_types, after.n_types);
  EXPECT_EQ(before.ttr, after.ttr);
}

TEST(TtrTest, PluggableTokenizer) {
  const std::vector<std::string> c = {"a-b a"};
  Tokenizer whitespace = [](std::string_view s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start < s.size()) {
      size_t end = s.find(' ', start);
      if (end == std::string_view::npos) end = s.size();
      if (end > start) out.emplace_back(s.substr(start, end - start));
      start = end + 1;
    }
    return out;
  };
  EXPECT_EQ(ComputeTtr(c, whitespace).n_tokens, 2u);
  EXPECT_EQ(ComputeTtr(c).n_tokens, 4u);
}

}  // namespace
}  // namespace ugcbench

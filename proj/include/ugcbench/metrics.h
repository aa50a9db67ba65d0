// include/ugcbench/metrics.h

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

#ifndef UGCBENCH_METRICS_H_
#define UGCBENCH_METRICS_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugcbench/embedding.h"

namespace ugcbench {

double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> a);

// 1 - cos(u, v), clamped to [0, 2]. Throws DegenerateInputError on a zero
// vector and ValidationError on a length mismatch.
double CosineDistance(std::span<const double> u, std::span<const double> v);
double CosineSimilarity(std::span<const double> u, std::span<const double> v);

// Mean of CosineDistance(a_i, b_i) over rows.
double AvgPairwiseCosineDistance(const EmbeddingMatrix &a, const EmbeddingMatrix &b,
                                 int threads = 0);
// Per-row cosine similarities, used by the STS and pair-classification metrics.
std::vector<double> RowCosineSimilarities(const EmbeddingMatrix &a, const EmbeddingMatrix &b);

using Tokenizer = std::function<std::vector<std::string>(std::string_view)>;
// Whitespace + punctuation split, lowercased.
Tokenizer DefaultTokenizer();

struct CorpusStats {
  size_t n_sentences = 0;
  size_t n_tokens = 0;
  size_t n_types = 0;
  double ttr = 0.0;  // raw ratio n_types / n_tokens
};

// Throws ValidationError on an empty corpus or a corpus without tokens.
CorpusStats ComputeTtr(std::span<const std::string> corpus, const Tokenizer &tokenizer);
CorpusStats ComputeTtr(std::span<const std::string> corpus);
double TtrRatio(const CorpusStats &ugc, const CorpusStats &standard);

}  // namespace ugcbench

#endif  // UGCBENCH_METRICS_H_

// src/metrics.cc

// Copyright 2026  The ugcbench Authors

// See ../LICENSE for clarification regarding multiple authors
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

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <omp.h>

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double CosineSimilarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw ValidationError("cosine of vectors with different lengths " + std::to_string(u.size()) +
                          " and " + std::to_string(v.size()));
  double nu = Norm(u);
  double nv = Norm(v);
  if (nu == 0.0 || nv == 0.0) throw DegenerateInputError("cosine of a zero-norm vector");
  return std::clamp(Dot(u, v) / (nu * nv), -1.0, 1.0);
}

double CosineDistance(std::span<const double> u, std::span<const double> v) {
  return 1.0 - CosineSimilarity(u, v);
}

std::vector<double> RowCosineSimilarities(const EmbeddingMatrix &a, const EmbeddingMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  std::vector<double> sims(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) sims[i] = CosineSimilarity(a.row(i), b.row(i));
  return sims;
}

double AvgPairwiseCosineDistance(const EmbeddingMatrix &a, const EmbeddingMatrix &b,
                                 int threads) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  const auto n = static_cast<int64_t>(a.rows());
  std::vector<double> dist(a.rows());
  bool degenerate = false;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(static) reduction(|| : degenerate)
  for (int64_t i = 0; i < n; ++i) {
    double nu = Norm(a.row(i));
    double nv = Norm(b.row(i));
    if (nu == 0.0 || nv == 0.0) {
      degenerate = true;
      continue;
    }
    dist[i] = 1.0 - std::clamp(Dot(a.row(i), b.row(i)) / (nu * nv), -1.0, 1.0);
  }
  if (degenerate) throw DegenerateInputError("cosine of a zero-norm row");
  double total = 0.0;
  for (double d : dist) total += d;
  return total / static_cast<double>(a.rows());
}

Tokenizer DefaultTokenizer() {
  return [](std::string_view s) { return Pretokenize(s, /*lowercase=*/true); };
}

CorpusStats ComputeTtr(std::span<const std::string> corpus, const Tokenizer &tokenizer) {
  if (corpus.empty()) throw ValidationError("TTR of an empty corpus");
  CorpusStats stats;
  stats.n_sentences = corpus.size();
  std::unordered_set<std::string> types;
  for (const auto &sentence : corpus) {
    for (auto &tok : tokenizer(sentence)) {
      ++stats.n_tokens;
      types.insert(std::move(tok));
    }
  }
  if (stats.n_tokens == 0) throw ValidationError("TTR of a corpus without tokens");
  stats.n_types = types.size();
  stats.ttr = static_cast<double>(stats.n_types) / static_cast<double>(stats.n_tokens);
  return stats;
}

CorpusStats ComputeTtr(std::span<const std::string> corpus) {
  return ComputeTtr(corpus, DefaultTokenizer());
}

double TtrRatio(const CorpusStats &ugc, const CorpusStats &standard) {
  if (standard.ttr <= 0.0) throw DegenerateInputError("standard corpus has zero TTR");
  return ugc.ttr / standard.ttr;
}

}  // namespace ugcbench

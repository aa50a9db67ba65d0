// include/ugcbench/xsim.h

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

#ifndef UGCBENCH_XSIM_H_
#define UGCBENCH_XSIM_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ugcbench/embedding.h"

namespace ugcbench {

enum class MarginKind { kRatio, kDistance, kAbsolute };

std::string_view MarginKindName(MarginKind kind);
std::optional<MarginKind> ParseMarginKind(std::string_view name);

struct MarginConfig {
  int k = 4;
  MarginKind kind = MarginKind::kRatio;
};

// Margin of a candidate pair given the sums of the k nearest-neighbour
// cosines on each side:
//   ratio:    cos / (sum_x / 2k + sum_y / 2k)
//   distance: cos - (sum_x / 2k + sum_y / 2k)
//   absolute: cos
// Throws DegenerateInputError on a zero ratio denominator.
double MarginFromCosine(double cos, double sum_nn_x, double sum_nn_y, int k, MarginKind kind);
// Same, from the vectors and their neighbourhood cosines (exactly k each).
double MarginScore(std::span<const double> x, std::span<const double> y,
                   std::span<const double> nn_x, std::span<const double> nn_y,
                   const MarginConfig &cfg);

struct AlignmentResult {
  std::vector<size_t> best_match;  // per source row, index into the target pool
  std::vector<size_t> errors;      // source rows whose best match is not row i
  double error_rate = 0.0;         // percent
};

// Cosine as computed by every xsim code path: sequential dot product divided
// by the product of precomputed row norms.
double PairCosine(std::span<const double> a, std::span<const double> b, double norm_a,
                  double norm_b);
std::vector<double> RowNorms(const EmbeddingMatrix &m);
// For each query row, the sum of its k largest cosines against `pool`,
// accumulated in descending order.
std::vector<double> KnnCosineSums(const EmbeddingMatrix &query, const EmbeddingMatrix &pool,
                                  int k, int threads = 0);

// Margin-based similarity search error rate. Source row i's gold target is
// target row i; rows past src.rows() in `tgt` are extra candidates (hard
// negatives). Ties go to the lowest target index. Blocked, OpenMP-parallel
// over rows; bit-identical for every thread count.
AlignmentResult Xsim(const EmbeddingMatrix &src, const EmbeddingMatrix &tgt,
                     const MarginConfig &cfg, int threads = 0);
// Single-threaded reference: materializes the full score matrix.
AlignmentResult XsimSerial(const EmbeddingMatrix &src, const EmbeddingMatrix &tgt,
                           const MarginConfig &cfg);

}  // namespace ugcbench

#endif  // UGCBENCH_XSIM_H_

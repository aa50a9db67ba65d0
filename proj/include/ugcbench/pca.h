// include/ugcbench/pca.h

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

#ifndef UGCBENCH_PCA_H_
#define UGCBENCH_PCA_H_

#include <array>
#include <vector>

#include "ugcbench/embedding.h"

namespace ugcbench {

struct PcaResult {
  std::vector<std::array<double, 2>> points;  // projections of the centred rows
  std::array<double, 2> explained_variance{};  // non-increasing
  std::array<double, 2> explained_ratio{};     // share of the total variance
  double total_variance = 0.0;
};

// Top-2 principal components from the eigen-decomposition of the sample
// covariance. The largest-magnitude coordinate of each direction is
// positive. Needs n >= 3 and a non-constant matrix.
PcaResult Pca2d(const EmbeddingMatrix &e);

// Spearman correlation between all n(n-1)/2 pairwise Euclidean distances in
// the original space and in the 2-D projection.
double DistancePreservation(const EmbeddingMatrix &original,
                            const std::vector<std::array<double, 2>> &reduced);

std::vector<double> PairwiseDistances(const EmbeddingMatrix &m);

}  // namespace ugcbench

#endif  // UGCBENCH_PCA_H_

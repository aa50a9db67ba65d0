// src/pca.cc

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

#include "ugcbench/pca.h"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ugcbench/error.h"
#include "ugcbench/statistics.h"

namespace ugcbench {

PcaResult Pca2d(const EmbeddingMatrix &e) {
  if (e.rows() < 3) throw ValidationError("PCA needs at least 3 rows, got " + std::to_string(e.rows()));
  const auto n = static_cast<Eigen::Index>(e.rows());
  const auto d = static_cast<Eigen::Index>(e.cols());
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> x(
      e.data().data(), n, d);
  Eigen::MatrixXd centred = x.rowwise() - x.colwise().mean();
  Eigen::MatrixXd cov = (centred.transpose() * centred) / static_cast<double>(n - 1);

  PcaResult r;
  r.total_variance = cov.trace();
  if (!(r.total_variance > 0.0)) throw DegenerateInputError("PCA of a constant matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw DegenerateInputError("eigen-decomposition failed");
  // Eigenvalues come back ascending.
  Eigen::MatrixXd dirs = Eigen::MatrixXd::Zero(d, 2);
  for (int c = 0; c < 2 && c < d; ++c) {
    const Eigen::Index src = d - 1 - c;
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < d; ++i)
      if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
    if (v(arg) < 0) v = -v;
    dirs.col(c) = v;
    r.explained_variance[c] = std::max(0.0, solver.eigenvalues()(src));
    r.explained_ratio[c] = r.explained_variance[c] / r.total_variance;
  }
  Eigen::MatrixXd proj = centred * dirs;
  r.points.resize(e.rows());
  for (Eigen::Index i = 0; i < n; ++i) r.points[i] = {proj(i, 0), proj(i, 1)};
  return r;
}

std::vector<double> PairwiseDistances(const EmbeddingMatrix &m) {
  std::vector<double> out;
  out.reserve(m.rows() * (m.rows() - 1) / 2);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = i + 1; j < m.rows(); ++j) {
      double s = 0.0;
      for (size_t c = 0; c < m.cols(); ++c) {
        double diff = m(i, c) - m(j, c);
        s += diff * diff;
      }
      out.push_back(std::sqrt(s));
    }
  }
  return out;
}

double DistancePreservation(const EmbeddingMatrix &original,
                            const std::vector<std::array<double, 2>> &reduced) {
  if (original.rows() < 3) throw ValidationError("distance preservation needs n >= 3");
  if (reduced.size() != original.rows())
    throw ValidationError("reduced point count " + std::to_string(reduced.size()) +
                          " does not match " + std::to_string(original.rows()) + " rows");
  std::vector<double> flat;
  flat.reserve(reduced.size() * 2);
  for (const auto &p : reduced) flat.insert(flat.end(), {p[0], p[1]});
  EmbeddingMatrix r(reduced.size(), 2, std::move(flat));
  return Spearman(PairwiseDistances(original), PairwiseDistances(r));
}

}  // namespace ugcbench

// src/xsim.cc

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

#include "ugcbench/xsim.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>

#include <omp.h>

#include "ugcbench/error.h"
#include "ugcbench/metrics.h"

namespace ugcbench {
namespace {

constexpr int64_t kRowBlock = 32;
constexpr size_t kPoolTile = 512;

void CheckInputs(const EmbeddingMatrix &src, const EmbeddingMatrix &tgt,
                 const MarginConfig &cfg) {
  if (src.empty() || tgt.empty()) throw ValidationError("xsim needs non-empty matrices");
  if (src.cols() != tgt.cols())
    throw ValidationError("xsim dimension mismatch: " + std::to_string(src.cols()) + " vs " +
                          std::to_string(tgt.cols()));
  if (tgt.rows() < src.rows())
    throw ValidationError("xsim target pool (" + std::to_string(tgt.rows()) +
                          " rows) is smaller than the source set (" +
                          std::to_string(src.rows()) + " rows)");
  if (cfg.k < 1) throw ValidationError("margin k must be >= 1");
  const size_t smaller = std::min(src.rows(), tgt.rows());
  if (static_cast<size_t>(cfg.k) >= smaller)
    throw ValidationError("margin k=" + std::to_string(cfg.k) +
                          " must be smaller than the row count " + std::to_string(smaller));
}

void CheckNorms(const std::vector<double> &norms, const char *which) {
  for (size_t i = 0; i < norms.size(); ++i)
    if (norms[i] == 0.0)
      throw DegenerateInputError(std::string("zero-norm ") + which + " row " + std::to_string(i));
}

// Keeps the k largest values seen, sorted descending.
class TopK {
 public:
  explicit TopK(int k) : k_(static_cast<size_t>(k)) { values_.reserve(k_); }
  void Push(double v) {
    if (values_.size() == k_) {
      if (!(v > values_.back())) return;
      values_.pop_back();
    }
    values_.insert(std::upper_bound(values_.begin(), values_.end(), v, std::greater<>()), v);
  }
  double Sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
  }

 private:
  size_t k_;
  std::vector<double> values_;
};

AlignmentResult Finish(std::vector<size_t> best, size_t n_src) {
  AlignmentResult r;
  r.best_match = std::move(best);
  for (size_t i = 0; i < n_src; ++i)
    if (r.best_match[i] != i) r.errors.push_back(i);
  r.error_rate = 100.0 * static_cast<double>(r.errors.size()) / static_cast<double>(n_src);
  return r;
}

}  // namespace

std::string_view MarginKindName(MarginKind kind) {
  switch (kind) {
    case MarginKind::kRatio: return "ratio";
    case MarginKind::kDistance: return "distance";
    case MarginKind::kAbsolute: return "absolute";
  }
  return "?";
}

std::optional<MarginKind> ParseMarginKind(std::string_view name) {
  if (name == "ratio") return MarginKind::kRatio;
  if (name == "distance") return MarginKind::kDistance;
  if (name == "absolute") return MarginKind::kAbsolute;
  return std::nullopt;
}

double MarginFromCosine(double cos, double sum_nn_x, double sum_nn_y, int k, MarginKind kind) {
  if (kind == MarginKind::kAbsolute) return cos;
  const double two_k = 2.0 * k;
  const double avg = sum_nn_x / two_k + sum_nn_y / two_k;
  if (kind == MarginKind::kDistance) return cos - avg;
  if (avg == 0.0) throw DegenerateInputError("ratio margin with zero neighbourhood average");
  return cos / avg;
}

double MarginScore(std::span<const double> x, std::span<const double> y,
                   std::span<const double> nn_x, std::span<const double> nn_y,
                   const MarginConfig &cfg) {
  if (nn_x.size() != static_cast<size_t>(cfg.k) || nn_y.size() != static_cast<size_t>(cfg.k))
    throw ValidationError("neighbourhoods must hold exactly k cosines");
  double sx = 0.0, sy = 0.0;
  for (double v : nn_x) sx += v;
  for (double v : nn_y) sy += v;
  return MarginFromCosine(CosineSimilarity(x, y), sx, sy, cfg.k, cfg.kind);
}

double PairCosine(std::span<const double> a, std::span<const double> b, double norm_a,
                  double norm_b) {
  return Dot(a, b) / (norm_a * norm_b);
}

std::vector<double> RowNorms(const EmbeddingMatrix &m) {
  std::vector<double> norms(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) norms[i] = Norm(m.row(i));
  return norms;
}

std::vector<double> KnnCosineSums(const EmbeddingMatrix &query, const EmbeddingMatrix &pool,
                                  int k, int threads) {
  const std::vector<double> qn = RowNorms(query);
  const std::vector<double> pn = RowNorms(pool);
  const auto nq = static_cast<int64_t>(query.rows());
  const size_t np = pool.rows();
  std::vector<double> sums(query.rows());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1)
  for (int64_t b0 = 0; b0 < nq; b0 += kRowBlock) {
    const int64_t b1 = std::min(nq, b0 + kRowBlock);
    std::vector<TopK> tops(static_cast<size_t>(b1 - b0), TopK(k));
    for (size_t t0 = 0; t0 < np; t0 += kPoolTile) {
      const size_t t1 = std::min(np, t0 + kPoolTile);
      for (int64_t i = b0; i < b1; ++i) {
        TopK &top = tops[static_cast<size_t>(i - b0)];
        for (size_t j = t0; j < t1; ++j)
          top.Push(PairCosine(query.row(i), pool.row(j), qn[i], pn[j]));
      }
    }
    for (int64_t i = b0; i < b1; ++i) sums[i] = tops[static_cast<size_t>(i - b0)].Sum();
  }
  return sums;
}

AlignmentResult Xsim(const EmbeddingMatrix &src, const EmbeddingMatrix &tgt,
                     const MarginConfig &cfg, int threads) {
  CheckInputs(src, tgt, cfg);
  const std::vector<double> sn = RowNorms(src);
  const std::vector<double> tn = RowNorms(tgt);
  CheckNorms(sn, "source");
  CheckNorms(tn, "target");

  std::vector<double> knn_src, knn_tgt;
  if (cfg.kind != MarginKind::kAbsolute) {
    knn_src = KnnCosineSums(src, tgt, cfg.k, threads);
    knn_tgt = KnnCosineSums(tgt, src, cfg.k, threads);
  }

  const auto ns = static_cast<int64_t>(src.rows());
  const size_t nt = tgt.rows();
  std::vector<size_t> best(src.rows(), 0);
  std::exception_ptr error;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1)
  for (int64_t b0 = 0; b0 < ns; b0 += kRowBlock) {
    try {
      const int64_t b1 = std::min(ns, b0 + kRowBlock);
      const auto rows = static_cast<size_t>(b1 - b0);
      std::vector<double> best_score(rows, 0.0);
      std::vector<bool> seen(rows, false);
      for (size_t t0 = 0; t0 < nt; t0 += kPoolTile) {
        const size_t t1 = std::min(nt, t0 + kPoolTile);
        for (int64_t i = b0; i < b1; ++i) {
          const auto r = static_cast<size_t>(i - b0);
          for (size_t j = t0; j < t1; ++j) {
            double cos = PairCosine(src.row(i), tgt.row(j), sn[i], tn[j]);
            double score = cfg.kind == MarginKind::kAbsolute
                               ? cos
                               : MarginFromCosine(cos, knn_src[i], knn_tgt[j], cfg.k, cfg.kind);
            if (!seen[r] || score > best_score[r]) {
              seen[r] = true;
              best_score[r] = score;
              best[i] = j;
            }
          }
        }
      }
    } catch (...) {
#pragma omp critical(ugcbench_xsim_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return Finish(std::move(best), src.rows());
}

AlignmentResult XsimSerial(const EmbeddingMatrix &src, const EmbeddingMatrix &tgt,
                           const MarginConfig &cfg) {
  CheckInputs(src, tgt, cfg);
  const std::vector<double> sn = RowNorms(src);
  const std::vector<double> tn = RowNorms(tgt);
  CheckNorms(sn, "source");
  CheckNorms(tn, "target");
  const size_t ns = src.rows(), nt = tgt.rows();

  std::vector<double> cos(ns * nt);
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < nt; ++j) cos[i * nt + j] = PairCosine(src.row(i), tgt.row(j), sn[i], tn[j]);

  std::vector<double> knn_src(ns, 0.0), knn_tgt(nt, 0.0);
  if (cfg.kind != MarginKind::kAbsolute) {
    for (size_t i = 0; i < ns; ++i) {
      TopK top(cfg.k);
      for (size_t j = 0; j < nt; ++j) top.Push(cos[i * nt + j]);
      knn_src[i] = top.Sum();
    }
    for (size_t j = 0; j < nt; ++j) {
      TopK top(cfg.k);
      for (size_t i = 0; i < ns; ++i) top.Push(PairCosine(tgt.row(j), src.row(i), tn[j], sn[i]));
      knn_tgt[j] = top.Sum();
    }
  }

  std::vector<size_t> best(ns, 0);
  for (size_t i = 0; i < ns; ++i) {
    double best_score = 0.0;
    for (size_t j = 0; j < nt; ++j) {
      double score = MarginFromCosine(cos[i * nt + j], knn_src[i], knn_tgt[j], cfg.k, cfg.kind);
      if (j == 0 || score > best_score) {
        best_score = score;
        best[i] = j;
      }
    }
  }
  return Finish(std::move(best), ns);
}

}  // namespace ugcbench

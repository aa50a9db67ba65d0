// src/embedding.cc

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

#include "ugcbench/embedding.h"

#include <cmath>
#include <string>

#include "ugcbench/error.h"

namespace ugcbench {

EmbeddingMatrix::EmbeddingMatrix(size_t rows, size_t cols)
    : EmbeddingMatrix(rows, cols, std::vector<double>(rows * cols, 0.0)) {}

EmbeddingMatrix::EmbeddingMatrix(size_t rows, size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0)
    throw ValidationError("embedding matrix needs at least one row and one column");
  if (data_.size() != rows * cols)
    throw ValidationError("embedding data has " + std::to_string(data_.size()) +
                          " values, expected " + std::to_string(rows * cols));
  CheckFinite();
}

EmbeddingMatrix EmbeddingMatrix::FromRows(const std::vector<std::vector<double>> &rows) {
  if (rows.empty()) throw ValidationError("embedding matrix needs at least one row");
  const size_t d = rows[0].size();
  std::vector<double> data;
  data.reserve(rows.size() * d);
  for (const auto &r : rows) {
    if (r.size() != d) throw ValidationError("ragged rows in embedding matrix");
    data.insert(data.end(), r.begin(), r.end());
  }
  return EmbeddingMatrix(rows.size(), d, std::move(data));
}

void EmbeddingMatrix::AppendRows(const EmbeddingMatrix &other) {
  if (other.empty()) return;
  if (empty()) {
    *this = other;
    return;
  }
  if (other.cols_ != cols_)
    throw ValidationError("cannot append rows of dimension " + std::to_string(other.cols_) +
                          " to a matrix of dimension " + std::to_string(cols_));
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void EmbeddingMatrix::CheckFinite() const {
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i]))
      throw ValidationError("non-finite embedding value at row " + std::to_string(i / cols_));
  }
}

}  // namespace ugcbench

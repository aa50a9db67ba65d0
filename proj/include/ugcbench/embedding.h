// include/ugcbench/embedding.h

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

#ifndef UGCBENCH_EMBEDDING_H_
#define UGCBENCH_EMBEDDING_H_

#include <cstddef>
#include <span>
#include <vector>

namespace ugcbench {

// Dense n x d matrix of sentence embeddings, row-major; row i belongs to
// sentence i of the companion corpus. Entries are always finite.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  // Zero-filled. Throws ValidationError unless rows, cols >= 1.
  EmbeddingMatrix(size_t rows, size_t cols);
  EmbeddingMatrix(size_t rows, size_t cols, std::vector<double> data);
  static EmbeddingMatrix FromRows(const std::vector<std::vector<double>> &rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  std::span<const double> row(size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(size_t i) { return {data_.data() + i * cols_, cols_}; }
  double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  double &operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const std::vector<double> &data() const { return data_; }

  // Appends the rows of `other`; column counts must agree.
  void AppendRows(const EmbeddingMatrix &other);
  // Throws ValidationError naming the first row holding a NaN or infinity.
  void CheckFinite() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace ugcbench

#endif  // UGCBENCH_EMBEDDING_H_

// include/ugcbench/distill.h

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

#ifndef UGCBENCH_DISTILL_H_
#define UGCBENCH_DISTILL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugcbench/augment.h"
#include "ugcbench/embedding.h"

namespace ugcbench {

enum class FeatureMode : uint32_t { kWordHash = 0, kCharNgram = 1 };

std::string_view FeatureModeName(FeatureMode mode);
// Accepts "word" and "char".
FeatureMode ParseFeatureMode(std::string_view name);

struct StudentConfig {
  FeatureMode mode = FeatureMode::kWordHash;
  uint64_t buckets = 8192;
  uint64_t hidden = 64;
  uint64_t out_dim = 32;
  uint64_t seed = 0;

  void Validate() const;
  bool operator==(const StudentConfig &) const = default;
};

using FeatureBag = std::vector<uint32_t>;

// Word mode: one id per lowercased token. Char mode: every 3-, 4- and 5-gram
// of each lowercased token wrapped in U+27E8 ... U+27E9.
FeatureBag Featurize(std::string_view sentence, const StudentConfig &config);

// n-gram strings for one token, in extraction order. Exposed for tests.
std::vector<std::string> CharNgrams(std::string_view token);

class StudentModel {
 public:
  StudentModel() = default;
  // Gaussian initialization from config.seed.
  explicit StudentModel(const StudentConfig &config);
  StudentModel(const StudentConfig &config, std::vector<double> table,
               std::vector<double> projection);

  const StudentConfig &config() const { return config_; }
  // buckets x hidden, row-major.
  std::vector<double> &table() { return table_; }
  const std::vector<double> &table() const { return table_; }
  // out_dim x hidden, row-major.
  std::vector<double> &projection() { return projection_; }
  const std::vector<double> &projection() const { return projection_; }

  void CheckFinite() const;

 private:
  StudentConfig config_;
  std::vector<double> table_;
  std::vector<double> projection_;
};

struct PooledFeatures {
  std::vector<double> values;
  // Feature id chosen per coordinate; the lowest id wins ties. Unused when
  // the bag is empty.
  std::vector<uint32_t> argmax;
};

PooledFeatures MaxPool(const StudentModel &model, const FeatureBag &features);
std::vector<double> EncodeFeatures(const StudentModel &model, const FeatureBag &features);
std::vector<double> Encode(const StudentModel &model, std::string_view sentence);
// Rows are independent; parallel over sentences.
EmbeddingMatrix EncodeCorpus(const StudentModel &model, const std::vector<std::string> &sentences,
                             int threads = 0);

// Sum over rows and columns of squared differences.
double MseSumLoss(const EmbeddingMatrix &student, const EmbeddingMatrix &teacher);

// One regression term: a featurized input and the teacher row it targets.
struct TrainingTerm {
  FeatureBag features;
  size_t target = 0;
};

// Two terms per pair, standard side first, both aimed at the pair's teacher row.
std::vector<TrainingTerm> BuildTerms(const std::vector<SentencePair> &pairs,
                                     const StudentConfig &config);

struct Gradients {
  double loss = 0.0;
  std::vector<double> table;
  std::vector<double> projection;
};

// Exact gradients of the summed squared error over `terms`.
Gradients ComputeGradientsSerial(const StudentModel &model, std::span<const TrainingTerm> terms,
                                 const EmbeddingMatrix &targets);
// Same result bit for bit: terms are evaluated in parallel, contributions are
// added in term order.
Gradients ComputeGradients(const StudentModel &model, std::span<const TrainingTerm> terms,
                           const EmbeddingMatrix &targets, int threads = 0);
Gradients PairGradients(const StudentModel &model, const std::vector<SentencePair> &pairs,
                        const EmbeddingMatrix &teacher_std);

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double eps = 1e-6;
  uint64_t warmup_steps = 100;
  // Pairs per batch; ignored when max_tokens_per_batch > 0.
  uint64_t batch_size = 32;
  // Feature budget per batch (both sides of a pair count).
  uint64_t max_tokens_per_batch = 0;
  uint64_t max_steps = 1000;
  uint64_t checkpoint_every = 100;
  double clip_norm = 5.0;
  uint64_t seed = 0;
  // Workers for gradient evaluation; 0 means the OpenMP default. Results do
  // not depend on it.
  int threads = 0;

  void Validate() const;
};

class AdamOptimizer {
 public:
  AdamOptimizer(const TrainConfig &config, size_t table_size, size_t projection_size);

  // Clips `grads` in place to the global norm limit, then updates `model`.
  // Returns the pre-clip gradient norm.
  double Step(StudentModel &model, Gradients &grads);
  uint64_t step() const { return step_; }
  double CurrentLearningRate() const;

 private:
  TrainConfig config_;
  uint64_t step_ = 0;
  std::vector<double> m_table_, v_table_, m_proj_, v_proj_;
};

struct Checkpoint {
  uint64_t step = 0;
  double validation_loss = 0.0;
  StudentModel model;
};

struct DevSet {
  const std::vector<SentencePair> *pairs = nullptr;
  const EmbeddingMatrix *teacher_std = nullptr;
};

struct TrainResult {
  double initial_validation_loss = 0.0;
  std::vector<Checkpoint> checkpoints;
};

// MSE(L[std], m[std]) + MSE(L[std], m[ugc]) over the dev pairs.
double ValidationLoss(const StudentModel &model, const EmbeddingMatrix &teacher_std,
                      const std::vector<SentencePair> &dev_pairs, int threads = 0);

// Without a dev set the training pairs are used for validation. The optional
// callback sees each checkpoint as it is produced.
TrainResult Train(const std::vector<SentencePair> &pairs, const EmbeddingMatrix &teacher_std,
                  const StudentConfig &student_config, const TrainConfig &train_config,
                  const DevSet &dev = {},
                  const std::function<void(const Checkpoint &)> &on_checkpoint = {});

// Lowest validation loss; the earliest step wins ties.
const Checkpoint &SelectBestCheckpoint(const std::vector<Checkpoint> &checkpoints);

// Frozen stand-in teacher: a fixed Gaussian vector per distinct lowercased
// token, summed over the sentence's tokens and scaled by 1/sqrt(dim).
class SyntheticTeacher {
 public:
  SyntheticTeacher(uint64_t seed, size_t dim);

  size_t dim() const { return dim_; }
  std::vector<double> Embed(std::string_view sentence) const;
  EmbeddingMatrix EmbedAll(const std::vector<std::string> &sentences, int threads = 0) const;

 private:
  uint64_t seed_;
  size_t dim_;
};

}  // namespace ugcbench

#endif  // UGCBENCH_DISTILL_H_

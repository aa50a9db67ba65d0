// src/trainer.cc

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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ugcbench/distill.h"
#include "ugcbench/error.h"
#include "ugcbench/random.h"

namespace ugcbench {
namespace {

std::vector<std::string> Side(const std::vector<SentencePair> &pairs, bool ugc) {
  std::vector<std::string> out;
  out.reserve(pairs.size());
  for (const auto &p : pairs) out.push_back(ugc ? p.ugc : p.std);
  return out;
}

void CheckAligned(const std::vector<SentencePair> &pairs, const EmbeddingMatrix &teacher,
                  const char *what) {
  if (pairs.empty()) throw ValidationError(std::string(what) + " set is empty");
  if (teacher.rows() != pairs.size())
    throw ValidationError(std::string(what) + " teacher has " + std::to_string(teacher.rows()) +
                          " rows for " + std::to_string(pairs.size()) + " pairs");
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
    throw ValidationError("learning rate must be positive and finite");
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0))
    throw ValidationError("Adam betas must be in [0, 1)");
  if (!(eps > 0.0)) throw ValidationError("Adam epsilon must be positive");
  if (!(clip_norm > 0.0) || !std::isfinite(clip_norm))
    throw ValidationError("clip norm must be positive and finite");
  if (checkpoint_every < 1) throw ValidationError("checkpoint_every must be >= 1");
  if (max_steps < 1) throw ValidationError("max_steps must be >= 1");
  if (max_tokens_per_batch == 0 && batch_size < 1)
    throw ValidationError("batch size must be >= 1");
}

AdamOptimizer::AdamOptimizer(const TrainConfig &config, size_t table_size,
                             size_t projection_size)
    : config_(config),
      m_table_(table_size, 0.0),
      v_table_(table_size, 0.0),
      m_proj_(projection_size, 0.0),
      v_proj_(projection_size, 0.0) {
  config_.Validate();
}

double AdamOptimizer::CurrentLearningRate() const {
  if (config_.warmup_steps == 0) return config_.learning_rate;
  const double frac = std::min(1.0, static_cast<double>(step_) /
                                        static_cast<double>(config_.warmup_steps));
  return config_.learning_rate * frac;
}

double AdamOptimizer::Step(StudentModel &model, Gradients &grads) {
  if (grads.table.size() != m_table_.size() || grads.projection.size() != m_proj_.size())
    throw ValidationError("gradient shape does not match the optimizer state");
  double sq = 0.0;
  for (double g : grads.table) sq += g * g;
  for (double g : grads.projection) sq += g * g;
  const double norm = std::sqrt(sq);
  if (!std::isfinite(norm)) throw ValidationError("non-finite gradient norm");
  if (norm > config_.clip_norm) {
    const double scale = config_.clip_norm / norm;
    for (double &g : grads.table) g *= scale;
    for (double &g : grads.projection) g *= scale;
  }

  ++step_;
  const double lr = CurrentLearningRate();
  const double t = static_cast<double>(step_);
  const double bc1 = 1.0 - std::pow(config_.beta1, t);
  const double bc2 = 1.0 - std::pow(config_.beta2, t);
  const double b1 = config_.beta1, b2 = config_.beta2, eps = config_.eps;

  auto update = [&](std::vector<double> &param, const std::vector<double> &grad,
                    std::vector<double> &m, std::vector<double> &v) {
    const auto n = static_cast<int64_t>(param.size());
#pragma omp parallel for schedule(static)
    for (int64_t k = 0; k < n; ++k) {
      const double g = grad[k];
      m[k] = b1 * m[k] + (1.0 - b1) * g;
      v[k] = b2 * v[k] + (1.0 - b2) * g * g;
      param[k] -= lr * (m[k] / bc1) / (std::sqrt(v[k] / bc2) + eps);
    }
  };
  update(model.table(), grads.table, m_table_, v_table_);
  update(model.projection(), grads.projection, m_proj_, v_proj_);
  return norm;
}

double ValidationLoss(const StudentModel &model, const EmbeddingMatrix &teacher_std,
                      const std::vector<SentencePair> &dev_pairs, int threads) {
  CheckAligned(dev_pairs, teacher_std, "dev");
  const auto student_std = EncodeCorpus(model, Side(dev_pairs, false), threads);
  const auto student_ugc = EncodeCorpus(model, Side(dev_pairs, true), threads);
  return MseSumLoss(student_std, teacher_std) + MseSumLoss(student_ugc, teacher_std);
}

TrainResult Train(const std::vector<SentencePair> &pairs, const EmbeddingMatrix &teacher_std,
                  const StudentConfig &student_config, const TrainConfig &train_config,
                  const DevSet &dev,
                  const std::function<void(const Checkpoint &)> &on_checkpoint) {
  student_config.Validate();
  train_config.Validate();
  CheckAligned(pairs, teacher_std, "training");
  if (teacher_std.cols() != student_config.out_dim)
    throw ValidationError("teacher dimension " + std::to_string(teacher_std.cols()) +
                          " does not match student output dimension " +
                          std::to_string(student_config.out_dim));
  if ((dev.pairs == nullptr) != (dev.teacher_std == nullptr))
    throw ValidationError("dev set needs both pairs and teacher embeddings");
  const auto &dev_pairs = dev.pairs ? *dev.pairs : pairs;
  const auto &dev_teacher = dev.teacher_std ? *dev.teacher_std : teacher_std;
  CheckAligned(dev_pairs, dev_teacher, "dev");
  if (dev_teacher.cols() != student_config.out_dim)
    throw ValidationError("dev teacher dimension does not match student output dimension");

  const int threads = train_config.threads;
  const auto terms = BuildTerms(pairs, student_config);
  StudentModel model(student_config);
  AdamOptimizer adam(train_config, model.table().size(), model.projection().size());

  TrainResult result;
  result.initial_validation_loss = ValidationLoss(model, dev_teacher, dev_pairs, threads);

  auto order_rng = RandomStream::Derive(train_config.seed, 0);
  std::vector<size_t> order(pairs.size());
  size_t cursor = order.size();
  uint64_t epoch = 0;
  std::vector<TrainingTerm> batch;

  for (uint64_t step = 1; step <= train_config.max_steps; ++step) {
    if (cursor >= order.size()) {
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      order_rng.Shuffle(order);
      cursor = 0;
      ++epoch;
    }
    batch.clear();
    if (train_config.max_tokens_per_batch > 0) {
      uint64_t used = 0;
      while (cursor < order.size()) {
        const size_t p = order[cursor];
        const uint64_t cost = terms[2 * p].features.size() + terms[2 * p + 1].features.size();
        if (!batch.empty() && used + cost > train_config.max_tokens_per_batch) break;
        batch.push_back(terms[2 * p]);
        batch.push_back(terms[2 * p + 1]);
        used += cost;
        ++cursor;
      }
    } else {
      const size_t end = std::min(order.size(), cursor + train_config.batch_size);
      for (; cursor < end; ++cursor) {
        batch.push_back(terms[2 * order[cursor]]);
        batch.push_back(terms[2 * order[cursor] + 1]);
      }
    }

    Gradients grads = ComputeGradients(model, batch, teacher_std, threads);
    if (!std::isfinite(grads.loss)) {
      std::ostringstream msg;
      msg << "non-finite training loss at step " << step << " (epoch " << epoch << ", "
          << batch.size() / 2 << " pairs, learning rate " << adam.CurrentLearningRate() << ")";
      throw ValidationError(msg.str());
    }
    adam.Step(model, grads);

    if (step % train_config.checkpoint_every == 0 || step == train_config.max_steps) {
      Checkpoint ckpt{step, ValidationLoss(model, dev_teacher, dev_pairs, threads), model};
      if (!std::isfinite(ckpt.validation_loss))
        throw ValidationError("non-finite validation loss at step " + std::to_string(step));
      if (on_checkpoint) on_checkpoint(ckpt);
      result.checkpoints.push_back(std::move(ckpt));
    }
  }
  return result;
}

const Checkpoint &SelectBestCheckpoint(const std::vector<Checkpoint> &checkpoints) {
  if (checkpoints.empty()) throw ValidationError("no checkpoints to select from");
  size_t best = 0;
  for (size_t i = 1; i < checkpoints.size(); ++i) {
    const auto &c = checkpoints[i];
    const auto &b = checkpoints[best];
    if (c.validation_loss < b.validation_loss ||
        (c.validation_loss == b.validation_loss && c.step < b.step))
      best = i;
  }
  return checkpoints[best];
}

}  // namespace ugcbench

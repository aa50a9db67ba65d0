// src/distill.cc

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

#include "ugcbench/distill.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

#include "ugcbench/error.h"
#include "ugcbench/hash.h"
#include "ugcbench/random.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

constexpr char32_t kTokenOpen = 0x27E8;
constexpr char32_t kTokenClose = 0x27E9;
constexpr int kMinNgram = 3;
constexpr int kMaxNgram = 5;

int Workers(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// Forward pass and local backward quantities for one term.
struct TermPass {
  double loss = 0.0;
  PooledFeatures pooled;
  std::vector<double> out_grad;     // d
  std::vector<double> pooled_grad;  // h
};

TermPass RunTerm(const StudentModel &model, const TrainingTerm &term,
                 const EmbeddingMatrix &targets) {
  const size_t h = model.config().hidden;
  const size_t d = model.config().out_dim;
  const auto &proj = model.projection();
  TermPass pass;
  pass.pooled = MaxPool(model, term.features);
  const auto target = targets.row(term.target);
  pass.out_grad.assign(d, 0.0);
  for (size_t i = 0; i < d; ++i) {
    double out = 0.0;
    for (size_t j = 0; j < h; ++j) out += proj[i * h + j] * pass.pooled.values[j];
    const double diff = out - target[i];
    pass.loss += diff * diff;
    pass.out_grad[i] = 2.0 * diff;
  }
  pass.pooled_grad.assign(h, 0.0);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < h; ++j) pass.pooled_grad[j] += proj[i * h + j] * pass.out_grad[i];
  return pass;
}

void CheckTerms(const StudentModel &model, std::span<const TrainingTerm> terms,
                const EmbeddingMatrix &targets) {
  if (targets.cols() != model.config().out_dim)
    throw ValidationError("teacher dimension " + std::to_string(targets.cols()) +
                          " does not match student output dimension " +
                          std::to_string(model.config().out_dim));
  for (const auto &t : terms) {
    if (t.target >= targets.rows())
      throw ValidationError("term targets teacher row " + std::to_string(t.target) +
                            " but only " + std::to_string(targets.rows()) + " rows exist");
    for (uint32_t f : t.features)
      if (f >= model.config().buckets) throw ValidationError("feature id out of range");
  }
}

void ScatterTable(const TermPass &pass, size_t h, std::vector<double> *table_grad) {
  if (pass.pooled.argmax.empty()) return;
  for (size_t j = 0; j < h; ++j)
    (*table_grad)[static_cast<size_t>(pass.pooled.argmax[j]) * h + j] += pass.pooled_grad[j];
}

}  // namespace

std::string_view FeatureModeName(FeatureMode mode) {
  return mode == FeatureMode::kWordHash ? "word" : "char";
}

FeatureMode ParseFeatureMode(std::string_view name) {
  if (name == "word") return FeatureMode::kWordHash;
  if (name == "char") return FeatureMode::kCharNgram;
  throw ValidationError("unknown feature mode '" + std::string(name) + "' (valid: word, char)");
}

void StudentConfig::Validate() const {
  if (mode != FeatureMode::kWordHash && mode != FeatureMode::kCharNgram)
    throw ValidationError("invalid feature mode");
  if (buckets < 1 || buckets > std::numeric_limits<uint32_t>::max())
    throw ValidationError("buckets must be in [1, 2^32)");
  if (hidden < 1) throw ValidationError("hidden size must be >= 1");
  if (out_dim < 1) throw ValidationError("output dimension must be >= 1");
}

std::vector<std::string> CharNgrams(std::string_view token) {
  std::u32string wrapped;
  wrapped.push_back(kTokenOpen);
  wrapped += DecodeUtf8Lenient(token);
  wrapped.push_back(kTokenClose);
  std::vector<std::string> grams;
  for (int n = kMinNgram; n <= kMaxNgram; ++n) {
    const auto len = static_cast<size_t>(n);
    for (size_t i = 0; i + len <= wrapped.size(); ++i)
      grams.push_back(EncodeUtf8(std::u32string_view(wrapped).substr(i, len)));
  }
  return grams;
}

FeatureBag Featurize(std::string_view sentence, const StudentConfig &config) {
  FeatureBag bag;
  for (const auto &token : Pretokenize(sentence, true)) {
    if (config.mode == FeatureMode::kWordHash) {
      bag.push_back(static_cast<uint32_t>(Fnv1a64(token) % config.buckets));
    } else {
      for (const auto &g : CharNgrams(token))
        bag.push_back(static_cast<uint32_t>(Fnv1a64(g) % config.buckets));
    }
  }
  return bag;
}

StudentModel::StudentModel(const StudentConfig &config) : config_(config) {
  config_.Validate();
  const size_t h = config_.hidden;
  table_.resize(config_.buckets * h);
  projection_.resize(config_.out_dim * h);
  auto table_rng = RandomStream::Derive(config_.seed, 0);
  for (double &w : table_) w = table_rng.Normal();
  auto proj_rng = RandomStream::Derive(config_.seed, 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(h));
  for (double &w : projection_) w = proj_rng.Normal() * scale;
  // Center each projection row.
  for (size_t i = 0; i < config_.out_dim; ++i) {
    double mean = 0.0;
    for (size_t j = 0; j < h; ++j) mean += projection_[i * h + j];
    mean /= static_cast<double>(h);
    for (size_t j = 0; j < h; ++j) projection_[i * h + j] -= mean;
  }
}

StudentModel::StudentModel(const StudentConfig &config, std::vector<double> table,
                           std::vector<double> projection)
    : config_(config), table_(std::move(table)), projection_(std::move(projection)) {
  config_.Validate();
  if (table_.size() != config_.buckets * config_.hidden)
    throw ValidationError("feature table size does not match the config");
  if (projection_.size() != config_.out_dim * config_.hidden)
    throw ValidationError("projection size does not match the config");
  CheckFinite();
}

void StudentModel::CheckFinite() const {
  for (size_t i = 0; i < table_.size(); ++i)
    if (!std::isfinite(table_[i]))
      throw ValidationError("non-finite feature weight in row " +
                            std::to_string(i / config_.hidden));
  for (size_t i = 0; i < projection_.size(); ++i)
    if (!std::isfinite(projection_[i]))
      throw ValidationError("non-finite projection weight in row " +
                            std::to_string(i / config_.hidden));
}

PooledFeatures MaxPool(const StudentModel &model, const FeatureBag &features) {
  const size_t h = model.config().hidden;
  const auto &table = model.table();
  PooledFeatures pooled;
  pooled.values.assign(h, 0.0);
  if (features.empty()) return pooled;
  pooled.argmax.assign(h, features[0]);
  for (size_t j = 0; j < h; ++j) pooled.values[j] = table[static_cast<size_t>(features[0]) * h + j];
  for (size_t k = 1; k < features.size(); ++k) {
    const uint32_t f = features[k];
    const double *row = table.data() + static_cast<size_t>(f) * h;
    for (size_t j = 0; j < h; ++j) {
      if (row[j] > pooled.values[j] || (row[j] == pooled.values[j] && f < pooled.argmax[j])) {
        pooled.values[j] = row[j];
        pooled.argmax[j] = f;
      }
    }
  }
  return pooled;
}

std::vector<double> EncodeFeatures(const StudentModel &model, const FeatureBag &features) {
  const size_t h = model.config().hidden;
  const size_t d = model.config().out_dim;
  const auto pooled = MaxPool(model, features);
  std::vector<double> out(d, 0.0);
  for (size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (size_t j = 0; j < h; ++j) acc += model.projection()[i * h + j] * pooled.values[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> Encode(const StudentModel &model, std::string_view sentence) {
  return EncodeFeatures(model, Featurize(sentence, model.config()));
}

EmbeddingMatrix EncodeCorpus(const StudentModel &model, const std::vector<std::string> &sentences,
                             int threads) {
  if (sentences.empty()) throw ValidationError("cannot encode an empty corpus");
  const size_t d = model.config().out_dim;
  std::vector<double> data(sentences.size() * d);
  const auto n = static_cast<int64_t>(sentences.size());
#pragma omp parallel for num_threads(Workers(threads)) schedule(dynamic, 64)
  for (int64_t i = 0; i < n; ++i) {
    const auto v = Encode(model, sentences[static_cast<size_t>(i)]);
    std::copy(v.begin(), v.end(), data.begin() + i * static_cast<int64_t>(d));
  }
  return EmbeddingMatrix(sentences.size(), d, std::move(data));
}

double MseSumLoss(const EmbeddingMatrix &student, const EmbeddingMatrix &teacher) {
  if (student.rows() != teacher.rows() || student.cols() != teacher.cols())
    throw ValidationError("loss shape mismatch: " + std::to_string(student.rows()) + "x" +
                          std::to_string(student.cols()) + " vs " +
                          std::to_string(teacher.rows()) + "x" + std::to_string(teacher.cols()));
  double total = 0.0;
  for (size_t i = 0; i < student.data().size(); ++i) {
    const double diff = student.data()[i] - teacher.data()[i];
    total += diff * diff;
  }
  return total;
}

std::vector<TrainingTerm> BuildTerms(const std::vector<SentencePair> &pairs,
                                     const StudentConfig &config) {
  std::vector<TrainingTerm> terms;
  terms.reserve(2 * pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    terms.push_back({Featurize(pairs[i].std, config), i});
    terms.push_back({Featurize(pairs[i].ugc, config), i});
  }
  return terms;
}

Gradients ComputeGradientsSerial(const StudentModel &model, std::span<const TrainingTerm> terms,
                                 const EmbeddingMatrix &targets) {
  CheckTerms(model, terms, targets);
  const size_t h = model.config().hidden;
  const size_t d = model.config().out_dim;
  Gradients g;
  g.table.assign(model.table().size(), 0.0);
  g.projection.assign(model.projection().size(), 0.0);
  for (const auto &term : terms) {
    const TermPass pass = RunTerm(model, term, targets);
    g.loss += pass.loss;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < h; ++j)
        g.projection[i * h + j] += pass.out_grad[i] * pass.pooled.values[j];
    ScatterTable(pass, h, &g.table);
  }
  return g;
}

Gradients ComputeGradients(const StudentModel &model, std::span<const TrainingTerm> terms,
                           const EmbeddingMatrix &targets, int threads) {
  CheckTerms(model, terms, targets);
  const size_t h = model.config().hidden;
  const size_t d = model.config().out_dim;
  const int workers = Workers(threads);
  std::vector<TermPass> passes(terms.size());
  const auto nterms = static_cast<int64_t>(terms.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (int64_t t = 0; t < nterms; ++t)
    passes[static_cast<size_t>(t)] = RunTerm(model, terms[static_cast<size_t>(t)], targets);

  Gradients g;
  g.table.assign(model.table().size(), 0.0);
  g.projection.assign(model.projection().size(), 0.0);
  // Rows split across workers; every entry still sums terms in order.
  const auto rows = static_cast<int64_t>(d);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (int64_t i = 0; i < rows; ++i) {
    double *out = g.projection.data() + i * static_cast<int64_t>(h);
    for (const auto &pass : passes) {
      const double gi = pass.out_grad[static_cast<size_t>(i)];
      for (size_t j = 0; j < h; ++j) out[j] += gi * pass.pooled.values[j];
    }
  }
  for (const auto &pass : passes) {
    g.loss += pass.loss;
    ScatterTable(pass, h, &g.table);
  }
  return g;
}

Gradients PairGradients(const StudentModel &model, const std::vector<SentencePair> &pairs,
                        const EmbeddingMatrix &teacher_std) {
  if (teacher_std.rows() != pairs.size())
    throw ValidationError("teacher has " + std::to_string(teacher_std.rows()) + " rows for " +
                          std::to_string(pairs.size()) + " pairs");
  const auto terms = BuildTerms(pairs, model.config());
  return ComputeGradientsSerial(model, terms, teacher_std);
}

SyntheticTeacher::SyntheticTeacher(uint64_t seed, size_t dim) : seed_(seed), dim_(dim) {
  if (dim < 1) throw ValidationError("teacher dimension must be >= 1");
}

std::vector<double> SyntheticTeacher::Embed(std::string_view sentence) const {
  auto tokens = Pretokenize(sentence, true);
  std::sort(tokens.begin(), tokens.end());
  std::vector<double> out(dim_, 0.0);
  for (const auto &tok : tokens) {
    auto rng = RandomStream::Derive(seed_, Fnv1a64(tok));
    for (double &v : out) v += rng.Normal();
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim_));
  for (double &v : out) v *= scale;
  return out;
}

EmbeddingMatrix SyntheticTeacher::EmbedAll(const std::vector<std::string> &sentences,
                                           int threads) const {
  if (sentences.empty()) throw ValidationError("cannot embed an empty corpus");
  std::vector<double> data(sentences.size() * dim_);
  const auto n = static_cast<int64_t>(sentences.size());
#pragma omp parallel for num_threads(Workers(threads)) schedule(dynamic, 64)
  for (int64_t i = 0; i < n; ++i) {
    const auto v = Embed(sentences[static_cast<size_t>(i)]);
    std::copy(v.begin(), v.end(), data.begin() + i * static_cast<int64_t>(dim_));
  }
  return EmbeddingMatrix(sentences.size(), dim_, std::move(data));
}

}  // namespace ugcbench

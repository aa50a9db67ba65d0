// bench/bench_kernels.cc

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

// Serial reference vs OpenMP kernel timings. Run with
// --benchmark_counters_tabular=true to compare rows side by side.

#include <benchmark/benchmark.h>

#include "synthetic_corpus.h"
#include "ugcbench/augment.h"
#include "ugcbench/distill.h"
#include "ugcbench/xsim.h"

namespace ugcbench {
namespace {

void BM_XsimSerial(benchmark::State &state) {
  const auto n = static_cast<size_t>(state.range(0));
  const auto src = testing::RandomMatrix(n, 64, 1);
  const auto tgt = testing::RandomMatrix(n, 64, 2);
  for (auto _ : state) benchmark::DoNotOptimize(XsimSerial(src, tgt, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_XsimSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_XsimParallel(benchmark::State &state) {
  const auto n = static_cast<size_t>(state.range(0));
  const auto src = testing::RandomMatrix(n, 64, 1);
  const auto tgt = testing::RandomMatrix(n, 64, 2);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Xsim(src, tgt, {}, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_XsimParallel)
    ->ArgsProduct({{500, 2000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

struct GradientFixture {
  StudentModel model;
  std::vector<TrainingTerm> terms;
  EmbeddingMatrix teacher;

  GradientFixture() {
    StudentConfig c;
    c.mode = FeatureMode::kCharNgram;
    model = StudentModel(c);
    const auto sents = testing::SyntheticSentences(256, 3);
    std::vector<SentencePair> pairs;
    for (const auto &s : sents) pairs.push_back({s, s + " lol", {}});
    terms = BuildTerms(pairs, c);
    teacher = SyntheticTeacher(1, c.out_dim).EmbedAll(sents);
  }
};

const GradientFixture &Gradients() {
  static const GradientFixture f;
  return f;
}

void BM_GradientsSerial(benchmark::State &state) {
  const auto &f = Gradients();
  for (auto _ : state) benchmark::DoNotOptimize(ComputeGradientsSerial(f.model, f.terms, f.teacher));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.terms.size()));
}
BENCHMARK(BM_GradientsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GradientsParallel(benchmark::State &state) {
  const auto &f = Gradients();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ComputeGradients(f.model, f.terms, f.teacher, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.terms.size()));
}
BENCHMARK(BM_GradientsParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

const AugmentResources &Resources() {
  static const AugmentResources r = AugmentResources::Load(testing::DataDir());
  return r;
}

const std::vector<std::string> &AugmentInput() {
  static const auto corpus = testing::SyntheticSentences(20000, 5);
  return corpus;
}

void BM_AugmentSerial(benchmark::State &state) {
  MixAllConfig cfg;
  cfg.global_seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(AugmentCorpusSerial(AugmentInput(), cfg, Resources(), 1000));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(AugmentInput().size()));
}
BENCHMARK(BM_AugmentSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AugmentParallel(benchmark::State &state) {
  MixAllConfig cfg;
  cfg.global_seed = 1;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(AugmentCorpus(AugmentInput(), cfg, Resources(), 1000, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(AugmentInput().size()));
}
BENCHMARK(BM_AugmentParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace ugcbench

BENCHMARK_MAIN();

// tests/acceptance/acceptance_main.cc

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "synthetic_corpus.h"
#include "ugcbench/augment.h"
#include "ugcbench/corpus_io.h"
#include "ugcbench/distill.h"
#include "ugcbench/hard_negatives.h"
#include "ugcbench/metrics.h"
#include "ugcbench/model_io.h"
#include "ugcbench/pca.h"
#include "ugcbench/random.h"
#include "ugcbench/statistics.h"
#include "ugcbench/xsim.h"
#include "xsim_oracle.h"

namespace ugcbench {

struct WelchCase {
  std::vector<double> a, b;
  double t, df, p;
};
struct PairedCase {
  std::vector<double> x, y;
  double rho;
};
struct ApCase {
  std::vector<double> scores;
  std::vector<int> labels;
  double ap;
};
struct QuantileCase {
  std::vector<double> values, probs, expected;
};

#include "stats_fixtures.inc"

namespace {

// Pinned tolerances.
constexpr double kZeroFractionTol = 0.01;
constexpr double kBinomialBinTol = 0.01;
constexpr double kSelfAlignTol = 1e-9;
constexpr double kGradientRelTol = 1e-4;
constexpr double kGradientStep = 1e-5;
constexpr double kGradientFloor = 1e-3;
constexpr double kDistillRatio = 0.5;
constexpr double kOracleRelTol = 1e-9;
constexpr double kPlanarSpearmanTol = 1e-6;

constexpr MarginKind kKinds[] = {MarginKind::kRatio, MarginKind::kDistance,
                                 MarginKind::kAbsolute};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string Fmt(const char *fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c, d);
  return buf;
}

std::vector<std::string> Corpus(size_t n, uint64_t seed) {
  return testing::SyntheticSentences(n, seed);
}

const AugmentResources &Resources() {
  static const AugmentResources r = AugmentResources::Load(testing::DataDir());
  return r;
}

std::vector<std::string> Side(const std::vector<SentencePair> &pairs, bool ugc) {
  std::vector<std::string> out;
  for (const auto &p : pairs) out.push_back(ugc ? p.ugc : p.std);
  return out;
}

std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Number of transforms mix_all selects for each of n sentences, using the
// same per-sentence streams as the corpus driver. The first `verify`
// sentences are re-run through the corpus driver to confirm the plans match.
std::vector<size_t> SelectionCounts(size_t n, size_t verify, uint64_t seed) {
  MixAllConfig cfg;
  cfg.global_seed = seed;
  const size_t chunk = 1000;
  std::vector<size_t> counts(n);
  for (size_t i = 0; i < n; ++i) {
    auto rng = SentenceStream(seed, chunk, i);
    counts[i] = PlanMixAll(cfg, rng).steps.size();
  }
  const auto sample = Corpus(verify, 1);
  const auto pairs = AugmentCorpus(sample, cfg, Resources(), chunk);
  for (size_t i = 0; i < verify; ++i) {
    auto rng = SentenceStream(seed, chunk, i);
    const auto plan = PlanMixAll(cfg, rng);
    if (ExecutePlan(sample[i], plan, Resources()).ugc != pairs[i].ugc)
      throw std::runtime_error("plan replay diverges from the corpus driver");
    if (plan.steps.size() < pairs[i].applied.size())
      throw std::runtime_error("more transforms applied than selected");
  }
  return counts;
}

Outcome ZeroTransformFraction() {
  const size_t n = 100000;
  const auto counts = SelectionCounts(n, 2000, 20240601);
  const double zero =
      static_cast<double>(std::count(counts.begin(), counts.end(), 0u)) / static_cast<double>(n);
  const double want = std::pow(0.9, 12);
  return {std::abs(zero - want) <= kZeroFractionTol,
          Fmt("untransformed %.4f vs 0.9^12 = %.4f", zero, want)};
}

Outcome SelectionHistogram() {
  const size_t n = 100000;
  const auto counts = SelectionCounts(n, 500, 77);
  std::vector<double> hist(13, 0.0);
  for (size_t c : counts) hist[c] += 1.0 / static_cast<double>(n);
  double worst = 0.0;
  double choose = 1.0;
  for (int k = 0; k <= 12; ++k) {
    if (k > 0) choose = choose * (12 - k + 1) / k;
    const double pmf = choose * std::pow(0.1, k) * std::pow(0.9, 12 - k);
    worst = std::max(worst, std::abs(hist[static_cast<size_t>(k)] - pmf));
  }
  return {worst <= kBinomialBinTol, Fmt("max |freq - pmf| = %.5f", worst)};
}

Outcome XsimOracle() {
  RandomStream rng(31337, 0);
  size_t checked = 0, mismatched = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n_src = 10 + rng.Below(191);
    const size_t n_tgt = n_src + rng.Below(static_cast<uint32_t>(201 - n_src));
    const size_t d = 1 + rng.Below(16);
    const auto src = testing::RandomMatrix(n_src, d, 1000 + 2 * trial);
    const auto tgt = testing::RandomMatrix(n_tgt, d, 1001 + 2 * trial);
    for (auto kind : kKinds) {
      for (int k : {1, 4, 8}) {
        ++checked;
        const auto got = Xsim(src, tgt, {k, kind}).best_match;
        if (got != testing::BruteForceAlignment(src, tgt, k, kind)) ++mismatched;
      }
    }
  }
  return {mismatched == 0, Fmt("%.0f of %.0f configurations differ from brute force",
                               static_cast<double>(mismatched), static_cast<double>(checked))};
}

Outcome SelfAlignment() {
  // Margin modes on d in [8, 32]; absolute mode also on d in [2, 7].
  double worst_xsim = 0.0, worst_cos = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 20 + 20 * static_cast<size_t>(trial % 10);
    const size_t d = 8 + static_cast<size_t>(trial % 25);
    const auto e = testing::RandomMatrix(n, d, 500 + trial);
    for (auto kind : kKinds) worst_xsim = std::max(worst_xsim, Xsim(e, e, {4, kind}).error_rate);
    worst_cos = std::max(worst_cos, std::abs(AvgPairwiseCosineDistance(e, e)));
    const auto low = testing::RandomMatrix(n, 2 + static_cast<size_t>(trial % 6), 900 + trial);
    worst_xsim = std::max(worst_xsim, Xsim(low, low, {4, MarginKind::kAbsolute}).error_rate);
    worst_cos = std::max(worst_cos, std::abs(AvgPairwiseCosineDistance(low, low)));
  }
  return {worst_xsim == 0.0 && worst_cos <= kSelfAlignTol,
          Fmt("max xsim %.2f%%, max cos distance %.2e", worst_xsim, worst_cos)};
}

double BatchLoss(const StudentModel &m, const std::vector<TrainingTerm> &terms,
                 const EmbeddingMatrix &targets) {
  double total = 0.0;
  for (const auto &t : terms) {
    const auto v = EncodeFeatures(m, t.features);
    for (size_t c = 0; c < v.size(); ++c) {
      const double diff = v[c] - targets(t.target, c);
      total += diff * diff;
    }
  }
  return total;
}

Outcome GradientFidelity() {
  double worst = 0.0;
  size_t entries = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    StudentConfig sc;
    sc.mode = seed % 2 ? FeatureMode::kCharNgram : FeatureMode::kWordHash;
    sc.buckets = 64;
    sc.hidden = 8;
    sc.out_dim = 4;
    sc.seed = seed;
    StudentModel m(sc);
    const auto sents = Corpus(6, 300 + seed);
    std::vector<SentencePair> pairs;
    for (size_t i = 0; i < sents.size(); ++i)
      pairs.push_back({sents[i], sents[(i + 1) % sents.size()], {}});
    const auto teacher = testing::RandomMatrix(pairs.size(), sc.out_dim, 900 + seed);
    const auto terms = BuildTerms(pairs, sc);
    const auto g = ComputeGradients(m, terms, teacher);
    auto check = [&](std::vector<double> &param, const std::vector<double> &grad) {
      for (size_t k = 0; k < param.size(); ++k) {
        const double keep = param[k];
        param[k] = keep + kGradientStep;
        const double up = BatchLoss(m, terms, teacher);
        param[k] = keep - kGradientStep;
        const double down = BatchLoss(m, terms, teacher);
        param[k] = keep;
        const double fd = (up - down) / (2 * kGradientStep);
        const double denom = std::max({std::abs(fd), std::abs(grad[k]), kGradientFloor});
        worst = std::max(worst, std::abs(fd - grad[k]) / denom);
        ++entries;
      }
    };
    check(m.projection(), g.projection);
    check(m.table(), g.table);
  }
  return {worst < kGradientRelTol,
          Fmt("max relative error %.2e over %.0f parameters", worst, static_cast<double>(entries))};
}

Outcome DistillationEffect() {
  const auto sents = Corpus(5500, 11);
  MixAllConfig mix;
  mix.global_seed = 3;
  const auto all = AugmentCorpus(sents, mix, Resources(), 1000);
  const std::vector<SentencePair> train(all.begin(), all.begin() + 5000);
  const std::vector<SentencePair> dev(all.begin() + 5000, all.end());
  const SyntheticTeacher teacher(5, 32);
  const auto teacher_train = teacher.EmbedAll(Side(train, false));
  const auto teacher_dev = teacher.EmbedAll(Side(dev, false));

  TrainConfig tc;
  tc.learning_rate = 3e-3;
  tc.warmup_steps = 150;
  tc.batch_size = 32;
  tc.max_steps = 1500;
  tc.checkpoint_every = 250;
  tc.seed = 2;

  auto measure = [&](const StudentModel &m, double *cos, double *xsim) {
    const auto ugc = EncodeCorpus(m, Side(dev, true));
    const auto std_side = EncodeCorpus(m, Side(dev, false));
    *cos = AvgPairwiseCosineDistance(ugc, std_side);
    *xsim = Xsim(ugc, teacher_dev, {}).error_rate;
  };
  bool pass = true;
  std::string detail;
  for (auto mode : {FeatureMode::kWordHash, FeatureMode::kCharNgram}) {
    StudentConfig sc;
    sc.mode = mode;
    sc.buckets = 8192;
    sc.hidden = 64;
    sc.out_dim = 32;
    sc.seed = 1;
    double cos0, xsim0, cos1, xsim1;
    measure(StudentModel(sc), &cos0, &xsim0);
    const auto result = Train(train, teacher_train, sc, tc, {&dev, &teacher_dev});
    measure(SelectBestCheckpoint(result.checkpoints).model, &cos1, &xsim1);
    pass &= cos1 <= kDistillRatio * cos0 && xsim1 < xsim0;
    if (!detail.empty()) detail += "; ";
    detail += std::string(FeatureModeName(mode)) +
              Fmt(": ugc-std cos %.4f -> %.4f (ratio %.3f), xsim %.1f%%", cos0, cos1, cos1 / cos0,
                  xsim0) +
              Fmt(" -> %.1f%%", xsim1);
  }
  return {pass, detail};
}

Outcome ValidationFormula() {
  StudentConfig sc;
  sc.buckets = 1024;
  sc.hidden = 16;
  sc.out_dim = 8;
  sc.seed = 9;
  const StudentModel model(sc);
  const auto sents = Corpus(200, 21);

  // Student identical to the teacher; ugc differs from std only in case.
  std::vector<SentencePair> cased;
  for (const auto &s : sents) {
    std::string upper = s;
    for (char &c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    cased.push_back({s, upper, {}});
  }
  const auto teacher_self = EncodeCorpus(model, sents);
  const double zero = ValidationLoss(model, teacher_self, cased);

  std::vector<SentencePair> same;
  for (const auto &s : sents) same.push_back({s, s, {}});
  const auto teacher = SyntheticTeacher(4, 8).EmbedAll(sents);
  const double loss = ValidationLoss(model, teacher, same);
  const double twice = 2.0 * MseSumLoss(teacher, EncodeCorpus(model, sents));
  return {zero == 0.0 && loss == twice,
          Fmt("teacher-equal loss %.3g; ugc==std loss %.17g vs 2*MSE %.17g", zero, loss, twice)};
}

Outcome Determinism() {
  const auto dir = std::filesystem::path(testing::ScratchDir("acceptance_determinism"));
  WriteLines((dir / "corpus.txt").string(), Corpus(3000, 41));
  auto run = [&](int threads) {
    const auto tag = std::to_string(threads);
    const auto out = dir / ("t" + tag);
    std::filesystem::create_directories(out);
    std::ostringstream sink, err;
    const std::vector<std::string> aug = {
        "--seed", "17", "--threads", tag, "--quiet", "augment", "--in", (dir / "corpus.txt").string(),
        "--out-std", (out / "std.txt").string(), "--out-ugc", (out / "ugc.txt").string(),
        "--out-manifest", (out / "applied.txt").string(), "--chunk-size", "250"};
    if (cli::RunCli(aug, sink, err) != 0) throw std::runtime_error("augment failed: " + err.str());
    const std::vector<std::string> train = {
        "--seed", "5", "--threads", tag, "--quiet", "train", "--std", (out / "std.txt").string(),
        "--ugc", (out / "ugc.txt").string(), "--synthetic-teacher", "16", "--out-dir",
        (out / "ckpt").string(), "--steps", "300", "--checkpoint-every", "100", "--buckets", "4096",
        "--hidden", "32", "--max-tokens", "600"};
    if (cli::RunCli(train, sink, err) != 0) throw std::runtime_error("train failed: " + err.str());
    std::map<std::string, std::string> files;
    for (const auto &entry : std::filesystem::recursive_directory_iterator(out))
      if (entry.is_regular_file())
        files[std::filesystem::relative(entry.path(), out).string()] = Slurp(entry.path());
    return files;
  };
  const auto one = run(1);
  const auto eight = run(8);
  size_t differing = 0;
  for (const auto &[name, bytes] : one) {
    const auto it = eight.find(name);
    if (it == eight.end() || it->second != bytes) ++differing;
  }
  return {one.size() == eight.size() && differing == 0 && one.size() >= 10,
          Fmt("%.0f files compared, %.0f differ", static_cast<double>(one.size()),
              static_cast<double>(differing))};
}

Outcome StatisticsOracle() {
  double worst = 0.0;
  auto rel = [&worst](double got, double want) {
    worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
  };
  for (const auto &c : kWelchCases) {
    const auto r = WelchTTest(c.a, c.b);
    rel(r.t, c.t);
    rel(r.df, c.df);
    rel(r.p, c.p);
  }
  for (const auto &c : kSpearmanCases) rel(Spearman(c.x, c.y), c.rho);
  for (const auto &c : kApCases) rel(AveragePrecision(c.scores, c.labels), c.ap);
  bool min_ok = true;
  for (const auto &c : kQuantileCases) {
    const auto q = Quantiles(c.values, c.probs);
    for (size_t j = 0; j < q.size(); ++j) rel(q[j], c.expected[j]);
    min_ok &= Quantile(c.values, 0.0) == *std::min_element(c.values.begin(), c.values.end());
  }
  const size_t cases =
      kWelchCases.size() + kSpearmanCases.size() + kApCases.size() + kQuantileCases.size();
  return {worst <= kOracleRelTol && min_ok && cases == 100,
          Fmt("%.0f cases, max relative error %.2e", static_cast<double>(cases), worst) +
              (min_ok ? ", quantile(0)=min" : ", quantile(0) != min")};
}

Outcome HardNegativeMonotonicity() {
  const auto gaz = LoadGazetteer(testing::DataDir() + "/gazetteer.tsv");
  size_t violations = 0;
  double factor_sum = 0.0;
  for (uint64_t f = 0; f < 20; ++f) {
    const auto sents = Corpus(60, 700 + f);
    MixAllConfig mix;
    mix.global_seed = f;
    mix.p_all = 0.3;
    const auto pairs = AugmentCorpus(sents, mix, Resources(), 1000);
    const SyntheticTeacher teacher(f, 16);
    const auto src = teacher.EmbedAll(Side(pairs, true));
    const auto tgt = teacher.EmbedAll(Side(pairs, false));
    const auto set = BuildHardNegatives(Side(pairs, false), kDefaultPerPerturber, gaz, f);
    factor_sum += set.factor;
    const auto pool = teacher.EmbedAll(set.Flatten());
    for (auto kind : kKinds) {
      const double base = Xsim(src, tgt, {4, kind}).error_rate;
      if (Xsim(src, pool, {4, kind}).error_rate < base) ++violations;
    }
  }
  const std::vector<std::string> full = {"She left Paris because 3 trains were late",
                                         "In 1990 we moved to Cairo since rent was 40 dollars"};
  const auto one = BuildHardNegatives(full, 1, gaz, 1);
  const bool arithmetic = one.factor == 4.0 && FullYieldFactor(1) == 4.0 &&
                          FullYieldFactor(kDefaultPerPerturber) == 43.0;
  return {violations == 0 && arithmetic,
          Fmt("%.0f decreases over 60 comparisons; factor(1)=%.0f, full-yield factor(14)=%.0f, "
              "mean realised factor %.1f",
              static_cast<double>(violations), one.factor,
              FullYieldFactor(kDefaultPerPerturber), factor_sum / 20.0)};
}

std::string FuzzString(RandomStream &rng) {
  static const std::vector<char32_t> pool = [] {
    std::vector<char32_t> p;
    for (char32_t c = 0x20; c < 0x7F; ++c) p.push_back(c);
    for (char32_t c : {0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x01, 0x1B, 0x7F, 0x85, 0x9F, 0xA0, 0xAD,
                       0x200B, 0x200E, 0x2028, 0x3000, 0xFEFF, 0xC9, 0xE9, 0xDF, 0x130, 0x178,
                       0x391, 0x3C9, 0x410, 0x44F, 0x4E2D, 0x1F600})
      p.push_back(c);
    for (const auto &[from, to] : PunctuationTable()) p.push_back(from);
    return p;
  }();
  std::u32string s;
  const size_t len = rng.Below(60);
  for (size_t i = 0; i < len; ++i) s.push_back(pool[rng.Below(static_cast<uint32_t>(pool.size()))]);
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

Outcome IoBitExactness() {
  const auto dir = std::filesystem::path(testing::ScratchDir("acceptance_io"));
  bool emb_ok = true;
  for (uint64_t s = 0; s < 5; ++s) {
    const auto a = (dir / ("a" + std::to_string(s) + ".f32")).string();
    const auto b = (dir / ("b" + std::to_string(s) + ".f32")).string();
    WriteEmbeddings(testing::RandomMatrix(100 + 37 * s, 3 + s, s), a);
    WriteEmbeddings(ReadEmbeddings(a), b);
    emb_ok &= Slurp(a) == Slurp(b) && Slurp(SidecarPath(a)) == Slurp(SidecarPath(b));
  }

  StudentConfig sc;
  sc.mode = FeatureMode::kCharNgram;
  sc.buckets = 2048;
  sc.hidden = 16;
  sc.out_dim = 8;
  const auto sents = Corpus(300, 55);
  std::vector<SentencePair> pairs;
  for (const auto &s : sents) pairs.push_back({s, s + " :)", {}});
  TrainConfig tc;
  tc.max_steps = 40;
  tc.checkpoint_every = 20;
  const auto result = Train(pairs, SyntheticTeacher(1, 8).EmbedAll(sents), sc, tc);
  const auto ckdir = (dir / "ckpt").string();
  std::filesystem::create_directories(ckdir);
  for (const auto &c : result.checkpoints) WriteCheckpoint(ckdir, c);
  const auto &best = SelectBestCheckpoint(result.checkpoints);
  WriteBestMarker(ckdir, best);
  const auto loaded = LoadBestCheckpoint(ckdir);
  const bool model_ok =
      ModelDigest(loaded) == ModelDigest(best.model) && SerializeModel(loaded) == SerializeModel(best.model);

  RandomStream rng(2024, 11);
  size_t broken = 0;
  const auto natural = Corpus(2000, 66);
  for (size_t i = 0; i < 10000; ++i) {
    std::string s = FuzzString(rng);
    if (i % 5 == 0) s = natural[i / 5] + s;
    for (int mask = 0; mask < 8; ++mask) {
      const PreprocessConfig cfg{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
      const auto once = Preprocess(s, cfg);
      if (Preprocess(once, cfg) != once) ++broken;
    }
  }
  return {emb_ok && model_ok && broken == 0,
          std::string("embedding rewrite ") + (emb_ok ? "identical" : "differs") +
              ", checkpoint digest " + (model_ok ? "stable" : "changed") +
              Fmt(", %.0f non-idempotent of 80000 preprocess runs", static_cast<double>(broken))};
}

Outcome PcaSanity() {
  double worst_planar = 0.0;
  for (uint64_t s = 0; s < 10; ++s) {
    const size_t n = 30 + 5 * s, d = 3 + s;
    const auto coords = testing::RandomMatrix(n, 2, 40 + s);
    const auto basis = testing::RandomMatrix(2, d, 80 + s);
    std::vector<double> data(n * d);
    for (size_t i = 0; i < n; ++i)
      for (size_t c = 0; c < d; ++c)
        data[i * d + c] = 2.0 * coords(i, 0) * basis(0, c) + coords(i, 1) * basis(1, c) - 0.7;
    const EmbeddingMatrix e(n, d, std::move(data));
    worst_planar = std::max(worst_planar, std::abs(1.0 - DistancePreservation(e, Pca2d(e).points)));
  }
  size_t bad_order = 0;
  for (uint64_t s = 0; s < 50; ++s) {
    const auto r = Pca2d(testing::RandomMatrix(10 + s, 2 + s % 20, 1000 + s));
    if (!(r.explained_variance[0] >= r.explained_variance[1] && r.explained_variance[1] >= 0.0 &&
          r.explained_variance[0] + r.explained_variance[1] <= r.total_variance * (1 + 1e-12)))
      ++bad_order;
  }
  return {worst_planar <= kPlanarSpearmanTol && bad_order == 0,
          Fmt("planar max |1 - r| = %.2e; %.0f of 50 variance orderings violated", worst_planar,
              static_cast<double>(bad_order))};
}

}  // namespace
}  // namespace ugcbench

int main() {
  using namespace ugcbench;
  const std::vector<Criterion> criteria = {
      {1, "mix_all zero-transform fraction", 30, ZeroTransformFraction},
      {2, "mix_all selection-count histogram", 30, SelectionHistogram},
      {3, "xsim brute-force equivalence", 120, XsimOracle},
      {4, "self-alignment", 10, SelfAlignment},
      {5, "gradient fidelity", 60, GradientFidelity},
      {6, "distillation effect", 300, DistillationEffect},
      {7, "validation-loss formula", 5, ValidationFormula},
      {8, "determinism across worker counts", 120, Determinism},
      {9, "statistics oracle pack", 10, StatisticsOracle},
      {10, "hard-negative monotonicity", 60, HardNegativeMonotonicity},
      {11, "I/O bit-exactness", 30, IoBitExactness},
      {12, "PCA sanity", 30, PcaSanity},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s: %s (%.2fs of %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), secs, c.budget_seconds,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

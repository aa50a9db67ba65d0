// tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "report.h"
#include "svg.h"
#include "ugcbench/augment.h"
#include "ugcbench/corpus_io.h"
#include "ugcbench/distill.h"
#include "ugcbench/error.h"
#include "ugcbench/hard_negatives.h"
#include "ugcbench/metrics.h"
#include "ugcbench/model_io.h"
#include "ugcbench/pca.h"
#include "ugcbench/statistics.h"
#include "ugcbench/xsim.h"

namespace ugcbench::cli {
namespace {

struct Context {
  GlobalOptions global;
  std::ostream *out = nullptr;
  std::ostream *err = nullptr;
  std::chrono::steady_clock::time_point start;

  std::ostream &Print() {
    static std::ostringstream sink;
    if (global.quiet) {
      sink.str("");
      return sink;
    }
    return *out;
  }
};

// ---- input helpers ----

double ParseDouble(std::string_view text, const std::string &where) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("not a number at " + where + ": '" + std::string(text) + "'");
  return v;
}

std::vector<double> JsonScores(const Json &doc, const std::string &path) {
  const Json *arr = &doc;
  if (doc.is_object()) {
    if (doc.contains("results") && doc["results"].contains("scores")) {
      arr = &doc["results"]["scores"];
    } else if (doc.contains("scores")) {
      arr = &doc["scores"];
    } else {
      throw ValidationError(path + " has no \"scores\" array");
    }
  }
  if (!arr->is_array()) throw ValidationError(path + ": scores must be an array");
  std::vector<double> out;
  for (const auto &v : *arr) {
    if (!v.is_number()) throw ValidationError(path + ": non-numeric score");
    out.push_back(v.get<double>());
  }
  return out;
}

// One number per line, or a JSON report / array when the path ends in .json.
std::vector<double> ReadValues(const std::string &path) {
  if (path.size() >= 5 && path.ends_with(".json")) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
      throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return JsonScores(doc, path);
  }
  std::vector<double> values;
  const auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    values.push_back(ParseDouble(lines[i], path + ":" + std::to_string(i + 1)));
  }
  return values;
}

std::vector<int> ReadBinaryLabels(const std::string &path) {
  std::vector<int> labels;
  for (double v : ReadValues(path)) {
    if (v != 0.0 && v != 1.0) throw ValidationError("labels in " + path + " must be 0 or 1");
    labels.push_back(static_cast<int>(v));
  }
  return labels;
}

std::vector<uint64_t> ParseSeeds(const std::string &text) {
  std::vector<uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ValidationError("invalid seed '" + item + "' in --seeds");
    seeds.push_back(v);
  }
  if (seeds.empty()) throw ValidationError("--seeds is empty");
  return seeds;
}

std::string SubstituteSeed(std::string tmpl, uint64_t seed) {
  const std::string key = "{seed}";
  for (size_t pos = tmpl.find(key); pos != std::string::npos; pos = tmpl.find(key, pos))
    tmpl.replace(pos, key.size(), std::to_string(seed));
  return tmpl;
}

void CheckRowCount(const std::string &text_path, const EmbeddingMatrix &emb,
                   const std::string &what) {
  if (text_path.empty()) return;
  const size_t lines = ReadLines(text_path).size();
  if (lines != emb.rows())
    throw ValidationError("row-count mismatch: " + text_path + " has " + std::to_string(lines) +
                          " lines but the " + what + " embeddings have " +
                          std::to_string(emb.rows()) + " rows");
}

std::vector<SentencePair> ReadPairs(const std::string &tsv, const std::string &std_path,
                                    const std::string &ugc_path) {
  std::vector<SentencePair> pairs;
  if (!tsv.empty()) {
    const auto lines = ReadLines(tsv);
    for (size_t i = 0; i < lines.size(); ++i) {
      const auto tab = lines[i].find('\t');
      if (tab == std::string::npos || lines[i].find('\t', tab + 1) != std::string::npos)
        throw ValidationError(tsv + ":" + std::to_string(i + 1) +
                              ": expected 'std<TAB>ugc'");
      pairs.push_back({lines[i].substr(0, tab), lines[i].substr(tab + 1), {}});
    }
    return pairs;
  }
  if (std_path.empty() || ugc_path.empty())
    throw ValidationError("give --pairs, or both --std and --ugc");
  const auto s = ReadLines(std_path);
  const auto u = ReadLines(ugc_path);
  if (s.size() != u.size())
    throw ValidationError("parallel files differ in length: " + std::to_string(s.size()) +
                          " vs " + std::to_string(u.size()));
  for (size_t i = 0; i < s.size(); ++i) pairs.push_back({s[i], u[i], {}});
  return pairs;
}

std::vector<std::string> StdSide(const std::vector<SentencePair> &pairs) {
  std::vector<std::string> out;
  for (const auto &p : pairs) out.push_back(p.std);
  return out;
}

std::vector<std::string> UgcSide(const std::vector<SentencePair> &pairs) {
  std::vector<std::string> out;
  for (const auto &p : pairs) out.push_back(p.ugc);
  return out;
}

std::string Fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

// ---- augment ----

struct AugmentOptions {
  std::string in, out_std, out_ugc, out_manifest, transforms = "mix_all", data_dir;
  double p_all = 0.1;
  size_t chunk_size = 1000;
  // Overrides the probability of each listed transform that has one.
  std::optional<double> p;
};

Report RunAugment(const AugmentOptions &o, Context &ctx) {
  Report r;
  r.command = "augment";
  if (!std::filesystem::exists(o.in)) throw IoError("input corpus not found: " + o.in);
  const auto corpus = ReadLines(o.in);
  const std::string data_dir = o.data_dir.empty() ? DefaultDataDir() : o.data_dir;
  const auto resources = AugmentResources::Load(data_dir);
  if (o.chunk_size < 1) throw ValidationError("--chunk-size must be >= 1");

  std::vector<SentencePair> pairs;
  if (o.transforms == "mix_all") {
    MixAllConfig config;
    config.p_all = o.p_all;
    config.global_seed = ctx.global.seed;
    config.Validate();
    pairs = AugmentCorpus(corpus, config, resources, o.chunk_size, ctx.global.threads);
  } else {
    std::vector<TransformSpec> steps;
    std::stringstream ss(o.transforms);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto id = ParseTransformId(name);
      if (!id)
        throw ValidationError("unknown transform '" + name + "'; valid ids: " +
                              ValidTransformNames() + ", or mix_all");
      auto spec = DefaultSpec(*id);
      if (o.p) {
        if (spec.id == TransformId::kSpac) {
          spec.p_add = spec.p_remove = *o.p;
        } else if (spec.p) {
          spec.p = *o.p;
        }
        spec.Validate();
      }
      steps.push_back(spec);
    }
    if (steps.empty()) throw ValidationError("--transforms is empty");
    pairs = AugmentCorpusFixed(corpus, steps, ctx.global.seed, resources, o.chunk_size,
                               ctx.global.threads);
  }

  std::vector<std::string> std_side, ugc_side;
  std::map<std::string, size_t> per_transform;
  size_t changed = 0;
  std::string manifest;
  for (size_t i = 0; i < pairs.size(); ++i) {
    std_side.push_back(pairs[i].std);
    ugc_side.push_back(pairs[i].ugc);
    if (pairs[i].ugc != pairs[i].std) ++changed;
    for (auto id : pairs[i].applied) ++per_transform[std::string(TransformName(id))];
    manifest += FormatManifestLine(i, pairs[i].applied);
    manifest += '\n';
  }
  WriteLines(o.out_std, std_side);
  WriteLines(o.out_ugc, ugc_side);
  r.outputs = {o.out_std, o.out_ugc};
  if (!o.out_manifest.empty()) {
    std::ofstream mf(o.out_manifest, std::ios::binary | std::ios::trunc);
    if (!mf) throw IoError("cannot write " + o.out_manifest);
    mf << manifest;
    r.outputs.push_back(o.out_manifest);
  }

  r.inputs = {o.in};
  r.seeds = {ctx.global.seed};
  r.config = {{"transforms", o.transforms}, {"p_all", o.p_all},     {"chunk_size", o.chunk_size},
              {"seed", ctx.global.seed},    {"input", o.in},        {"data_dir", data_dir}};
  if (o.p) r.config["p"] = *o.p;
  r.results = {{"sentences", pairs.size()}, {"changed", changed}, {"applied_counts", per_transform}};

  auto &p = ctx.Print();
  p << "sentences  " << pairs.size() << "\nchanged    " << changed << '\n';
  for (const auto &[name, count] : per_transform) p << "  " << std::left << std::setw(6) << name << count << '\n';
  return r;
}

// ---- stats ----

Json StatsJson(const CorpusStats &s) {
  return {{"sentences", s.n_sentences}, {"tokens", s.n_tokens}, {"types", s.n_types},
          {"ttr", s.ttr}};
}

Report RunStats(const std::string &std_path, const std::string &ugc_path, Context &ctx) {
  Report r;
  r.command = "stats";
  auto &p = ctx.Print();
  const auto std_stats = ComputeTtr(ReadLines(std_path));
  r.inputs.push_back(std_path);
  r.results["standard"] = StatsJson(std_stats);
  p << "standard  sentences " << std_stats.n_sentences << "  tokens " << std_stats.n_tokens
    << "  types " << std_stats.n_types << "  TTR " << Fixed(std_stats.ttr, 4) << '\n';
  if (!ugc_path.empty()) {
    const auto ugc_stats = ComputeTtr(ReadLines(ugc_path));
    r.inputs.push_back(ugc_path);
    r.results["ugc"] = StatsJson(ugc_stats);
    const double ratio = TtrRatio(ugc_stats, std_stats);
    r.results["ttr_ratio"] = ratio;
    p << "ugc       sentences " << ugc_stats.n_sentences << "  tokens " << ugc_stats.n_tokens
      << "  types " << ugc_stats.n_types << "  TTR " << Fixed(ugc_stats.ttr, 4) << '\n'
      << "TTR ratio (ugc/std) " << Fixed(ratio, 4) << '\n';
  }
  r.config = {{"std", std_path}, {"ugc", ugc_path}};
  return r;
}

// ---- eval ----

struct PairEvalOptions {
  std::string src_emb, tgt_emb, hard_neg, src_text, tgt_text, seeds, baseline;
  int k = 4;
  std::string margin = "ratio";
};

// Runs `score` once per seed (or once), aggregates, and compares against a
// baseline report when one is given.
void RunSeeded(const PairEvalOptions &o, Context &ctx, Report &r, const std::string &metric,
               const std::function<Json(const std::string &, const std::string &,
                                        const std::string &)> &score) {
  std::vector<uint64_t> seeds;
  const bool multi = !o.seeds.empty();
  if (multi) {
    seeds = ParseSeeds(o.seeds);
  } else {
    seeds = {ctx.global.seed};
  }
  std::vector<double> scores;
  Json per_seed = Json::array();
  auto &p = ctx.Print();
  for (uint64_t seed : seeds) {
    const std::string src = SubstituteSeed(o.src_emb, seed);
    const std::string tgt = SubstituteSeed(o.tgt_emb, seed);
    const std::string neg = o.hard_neg.empty() ? "" : SubstituteSeed(o.hard_neg, seed);
    r.inputs.push_back(src);
    r.inputs.push_back(tgt);
    if (!neg.empty()) r.inputs.push_back(neg);
    Json entry = score(src, tgt, neg);
    const double v = entry[metric].get<double>();
    scores.push_back(v);
    entry["seed"] = seed;
    per_seed.push_back(entry);
    if (multi) p << "seed " << seed << "  " << metric << " " << Fixed(v, 4) << '\n';
  }
  r.seeds = seeds;
  const double mean = Mean(scores);
  r.results["metric"] = metric;
  r.results["scores"] = scores;
  r.results["mean"] = mean;
  r.results["per_seed"] = per_seed;
  p << metric << " " << Fixed(mean, 4) << (multi ? " (mean over seeds)" : "") << '\n';
  if (!o.baseline.empty()) {
    const auto base = ReadValues(o.baseline);
    r.inputs.push_back(o.baseline);
    try {
      const auto t = WelchTTest(scores, base);
      r.results["ttest"] = {{"baseline", o.baseline}, {"baseline_mean", Mean(base)},
                            {"t", t.t}, {"df", t.df}, {"p", t.p},
                            {"stars", SignificanceStars(t.p)}};
      p << "vs baseline mean " << Fixed(Mean(base), 4) << "  t " << Fixed(t.t, 4) << "  p "
        << std::setprecision(4) << t.p << ' ' << SignificanceStars(t.p) << '\n';
    } catch (const DegenerateInputError &e) {
      r.results["ttest"] = {{"baseline", o.baseline}, {"baseline_mean", Mean(base)},
                            {"error", e.what()}};
      p << "vs baseline mean " << Fixed(Mean(base), 4) << "  t-test undefined: " << e.what()
        << '\n';
    }
  }
  r.config["seeds"] = seeds;
  r.config["src_emb"] = o.src_emb;
  r.config["tgt_emb"] = o.tgt_emb;
  r.config["hard_neg"] = o.hard_neg;
  r.config["baseline"] = o.baseline;
}

Report RunEvalXsim(const PairEvalOptions &o, Context &ctx) {
  Report r;
  r.command = "eval xsim";
  auto kind = ParseMarginKind(o.margin);
  if (!kind) throw ValidationError("unknown margin '" + o.margin + "' (ratio, distance, absolute)");
  MarginConfig cfg;
  cfg.k = o.k;
  cfg.kind = *kind;
  r.config = {{"k", o.k}, {"margin", o.margin}};
  RunSeeded(o, ctx, r, "error_rate",
            [&](const std::string &src, const std::string &tgt, const std::string &neg) {
              const auto s = ReadEmbeddings(src);
              auto t = ReadEmbeddings(tgt);
              CheckRowCount(o.src_text, s, "source");
              CheckRowCount(o.tgt_text, t, "target");
              const size_t gold_rows = t.rows();
              if (!neg.empty()) t.AppendRows(ReadEmbeddings(neg));
              const auto res = Xsim(s, t, cfg, ctx.global.threads);
              return Json{{"error_rate", res.error_rate},
                          {"errors", res.errors.size()},
                          {"sources", s.rows()},
                          {"pool", t.rows()},
                          {"gold_targets", gold_rows}};
            });
  return r;
}

Report RunEvalCosdist(const PairEvalOptions &o, Context &ctx) {
  Report r;
  r.command = "eval cosdist";
  RunSeeded(o, ctx, r, "cos_distance",
            [&](const std::string &src, const std::string &tgt, const std::string &) {
              const auto s = ReadEmbeddings(src);
              const auto t = ReadEmbeddings(tgt);
              CheckRowCount(o.src_text, s, "source");
              CheckRowCount(o.tgt_text, t, "target");
              return Json{{"cos_distance", AvgPairwiseCosineDistance(s, t, ctx.global.threads)},
                          {"rows", s.rows()}};
            });
  return r;
}

Report RunEvalQuantiles(const std::string &values_path, const std::string &probs_text,
                        Context &ctx) {
  Report r;
  r.command = "eval quantiles";
  const auto values = ReadValues(values_path);
  std::vector<double> probs;
  std::stringstream ss(probs_text);
  std::string item;
  while (std::getline(ss, item, ',')) probs.push_back(ParseDouble(item, "--probs"));
  if (probs.empty()) throw ValidationError("--probs is empty");
  const auto q = Quantiles(values, probs);
  Json table = Json::array();
  auto &p = ctx.Print();
  p << "prob    value\n";
  for (size_t i = 0; i < probs.size(); ++i) {
    table.push_back({{"prob", probs[i]}, {"value", q[i]}});
    p << std::left << std::setw(8) << probs[i] << std::setprecision(10) << q[i] << '\n';
  }
  r.inputs = {values_path};
  r.config = {{"values", values_path}, {"probs", probs}};
  r.results = {{"n", values.size()}, {"quantiles", table}};
  return r;
}

Report RunEvalTtest(const std::string &a_path, const std::string &b_path, Context &ctx) {
  Report r;
  r.command = "eval ttest";
  const auto a = ReadValues(a_path);
  const auto b = ReadValues(b_path);
  const auto t = WelchTTest(a, b);
  r.inputs = {a_path, b_path};
  r.config = {{"a", a_path}, {"b", b_path}};
  r.results = {{"mean_a", Mean(a)}, {"mean_b", Mean(b)}, {"t", t.t},
               {"df", t.df},        {"p", t.p},          {"stars", SignificanceStars(t.p)}};
  ctx.Print() << "mean a " << Fixed(Mean(a), 4) << "  mean b " << Fixed(Mean(b), 4) << "\nt "
              << Fixed(t.t, 4) << "  df " << Fixed(t.df, 2) << "  p " << std::setprecision(4)
              << t.p << ' ' << SignificanceStars(t.p) << '\n';
  return r;
}

Report RunEvalSts(const std::string &src, const std::string &tgt, const std::string &gold_path,
                  Context &ctx) {
  Report r;
  r.command = "eval sts";
  const auto a = ReadEmbeddings(src);
  const auto b = ReadEmbeddings(tgt);
  const auto gold = ReadValues(gold_path);
  if (gold.size() != a.rows())
    throw ValidationError("row-count mismatch: " + std::to_string(gold.size()) +
                          " gold scores for " + std::to_string(a.rows()) + " pairs");
  const auto sims = RowCosineSimilarities(a, b);
  const double rho = Spearman(sims, gold);
  r.inputs = {src, tgt, gold_path};
  r.config = {{"src_emb", src}, {"tgt_emb", tgt}, {"gold", gold_path}};
  r.results = {{"spearman", rho}, {"pairs", gold.size()}};
  ctx.Print() << "Spearman " << Fixed(rho * 100.0, 2) << " (x100) over " << gold.size()
              << " pairs\n";
  return r;
}

Report RunEvalAp(const std::string &scores_path, const std::string &src, const std::string &tgt,
                 const std::string &labels_path, Context &ctx) {
  Report r;
  r.command = "eval ap";
  std::vector<double> scores;
  if (!scores_path.empty()) {
    scores = ReadValues(scores_path);
    r.inputs.push_back(scores_path);
  } else {
    if (src.empty() || tgt.empty())
      throw ValidationError("give --scores, or --src-emb and --tgt-emb");
    scores = RowCosineSimilarities(ReadEmbeddings(src), ReadEmbeddings(tgt));
    r.inputs.push_back(src);
    r.inputs.push_back(tgt);
  }
  const auto labels = ReadBinaryLabels(labels_path);
  r.inputs.push_back(labels_path);
  if (labels.size() != scores.size())
    throw ValidationError("row-count mismatch: " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(scores.size()) + " scores");
  const double ap = AveragePrecision(scores, labels);
  r.config = {{"scores", scores_path}, {"src_emb", src}, {"tgt_emb", tgt}, {"labels", labels_path}};
  r.results = {{"average_precision", ap}, {"n", scores.size()}};
  ctx.Print() << "AP " << Fixed(ap * 100.0, 2) << " (x100) over " << scores.size() << " items\n";
  return r;
}

// ---- hardneg ----

Report RunHardneg(const std::string &in, const std::string &out_path, int per_perturber,
                  const std::string &gazetteer_path, Context &ctx) {
  Report r;
  r.command = "hardneg";
  const std::string gaz = gazetteer_path.empty()
                              ? (std::filesystem::path(DefaultDataDir()) / "gazetteer.tsv").string()
                              : gazetteer_path;
  const auto targets = ReadLines(in);
  const auto set = BuildHardNegatives(targets, per_perturber, LoadGazetteer(gaz), ctx.global.seed);
  WriteLines(out_path, set.Flatten());
  r.inputs = {in, gaz};
  r.outputs = {out_path};
  r.seeds = {ctx.global.seed};
  r.config = {{"input", in}, {"per_perturber", per_perturber}, {"gazetteer", gaz},
              {"seed", ctx.global.seed}};
  r.results = {{"originals", set.originals.size()},
               {"negatives", set.total_negatives()},
               {"factor", set.factor},
               {"full_yield_factor", FullYieldFactor(per_perturber)}};
  ctx.Print() << "originals " << set.originals.size() << "  negatives " << set.total_negatives()
              << "  factor " << Fixed(set.factor, 2) << " (full yield "
              << Fixed(FullYieldFactor(per_perturber), 0) << ")\n";
  return r;
}

// ---- train / validate / embed ----

struct TrainOptions {
  std::string pairs, std_path, ugc_path, teacher_emb, dev_pairs, dev_std, dev_ugc, dev_teacher_emb;
  std::string config_path, out_dir, mode = "word";
  uint64_t synthetic_teacher_dim = 0;
  uint64_t teacher_seed = 0;
  StudentConfig student;
  TrainConfig train;
};

void ApplyJsonConfig(const std::string &path, StudentConfig *s, TrainConfig *t, std::string *mode) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError(path + " must hold a JSON object");
  for (const auto &[key, value] : doc.items()) {
    if (key == "mode") *mode = value.get<std::string>();
    else if (key == "buckets") s->buckets = value.get<uint64_t>();
    else if (key == "hidden") s->hidden = value.get<uint64_t>();
    else if (key == "out_dim") s->out_dim = value.get<uint64_t>();
    else if (key == "learning_rate") t->learning_rate = value.get<double>();
    else if (key == "beta1") t->beta1 = value.get<double>();
    else if (key == "beta2") t->beta2 = value.get<double>();
    else if (key == "eps") t->eps = value.get<double>();
    else if (key == "warmup_steps") t->warmup_steps = value.get<uint64_t>();
    else if (key == "batch_size") t->batch_size = value.get<uint64_t>();
    else if (key == "max_tokens_per_batch") t->max_tokens_per_batch = value.get<uint64_t>();
    else if (key == "max_steps") t->max_steps = value.get<uint64_t>();
    else if (key == "checkpoint_every") t->checkpoint_every = value.get<uint64_t>();
    else if (key == "clip_norm") t->clip_norm = value.get<double>();
    else throw ValidationError("unknown key '" + key + "' in " + path);
  }
}

EmbeddingMatrix TeacherFor(const std::vector<SentencePair> &pairs, const std::string &emb_path,
                           uint64_t synthetic_dim, uint64_t teacher_seed, int threads,
                           std::vector<std::string> *inputs) {
  if (!emb_path.empty()) {
    inputs->push_back(emb_path);
    auto t = ReadEmbeddings(emb_path);
    if (t.rows() != pairs.size())
      throw ValidationError("teacher/pair misalignment: " + std::to_string(t.rows()) +
                            " teacher rows for " + std::to_string(pairs.size()) + " pairs");
    return t;
  }
  if (synthetic_dim == 0)
    throw ValidationError("give --teacher-emb or --synthetic-teacher DIM");
  return SyntheticTeacher(teacher_seed, synthetic_dim).EmbedAll(StdSide(pairs), threads);
}

Json StudentJson(const StudentConfig &s) {
  return {{"mode", FeatureModeName(s.mode)}, {"buckets", s.buckets}, {"hidden", s.hidden},
          {"out_dim", s.out_dim},            {"seed", s.seed}};
}

Json TrainJson(const TrainConfig &t) {
  return {{"learning_rate", t.learning_rate},
          {"beta1", t.beta1},
          {"beta2", t.beta2},
          {"eps", t.eps},
          {"warmup_steps", t.warmup_steps},
          {"batch_size", t.batch_size},
          {"max_tokens_per_batch", t.max_tokens_per_batch},
          {"max_steps", t.max_steps},
          {"checkpoint_every", t.checkpoint_every},
          {"clip_norm", t.clip_norm},
          {"seed", t.seed}};
}

Report RunTrain(TrainOptions o, Context &ctx) {
  Report r;
  r.command = "train";
  const auto pairs = ReadPairs(o.pairs, o.std_path, o.ugc_path);
  for (const auto &p : {o.pairs, o.std_path, o.ugc_path})
    if (!p.empty()) r.inputs.push_back(p);
  o.student.mode = ParseFeatureMode(o.mode);
  o.student.seed = ctx.global.seed;
  o.train.seed = ctx.global.seed;
  o.train.threads = ctx.global.threads;

  auto teacher = TeacherFor(pairs, o.teacher_emb, o.synthetic_teacher_dim, o.teacher_seed,
                            ctx.global.threads, &r.inputs);
  if (o.teacher_emb.empty()) o.student.out_dim = o.synthetic_teacher_dim;
  else o.student.out_dim = teacher.cols();

  std::vector<SentencePair> dev_pairs;
  EmbeddingMatrix dev_teacher;
  DevSet dev;
  if (!o.dev_pairs.empty() || !o.dev_std.empty()) {
    dev_pairs = ReadPairs(o.dev_pairs, o.dev_std, o.dev_ugc);
    dev_teacher = TeacherFor(dev_pairs, o.dev_teacher_emb, o.synthetic_teacher_dim,
                             o.teacher_seed, ctx.global.threads, &r.inputs);
    dev = {&dev_pairs, &dev_teacher};
  }

  std::filesystem::create_directories(o.out_dir);
  auto &p = ctx.Print();
  const auto result = Train(pairs, teacher, o.student, o.train, dev, [&](const Checkpoint &c) {
    WriteCheckpoint(o.out_dir, c);
    r.outputs.push_back((std::filesystem::path(o.out_dir) / CheckpointFileName(c.step)).string());
    p << "step " << std::setw(8) << c.step << "  validation loss " << std::setprecision(8)
      << c.validation_loss << '\n';
  });
  WriteLearningCurve(o.out_dir, result.initial_validation_loss, result.checkpoints);
  const auto &best = SelectBestCheckpoint(result.checkpoints);
  WriteBestMarker(o.out_dir, best);

  Json curve = Json::array();
  for (const auto &c : result.checkpoints)
    curve.push_back({{"step", c.step}, {"validation_loss", c.validation_loss}});
  r.seeds = {ctx.global.seed};
  if (o.teacher_emb.empty()) r.seeds.push_back(o.teacher_seed);
  r.config = {{"student", StudentJson(o.student)},
              {"train", TrainJson(o.train)},
              {"teacher", o.teacher_emb.empty() ? Json("synthetic") : Json(o.teacher_emb)},
              {"teacher_seed", o.teacher_seed},
              {"pairs", pairs.size()},
              {"dev_pairs", dev_pairs.size()}};
  r.results = {{"initial_validation_loss", result.initial_validation_loss},
               {"checkpoints", curve},
               {"best_step", best.step},
               {"best_validation_loss", best.validation_loss},
               {"best_checkpoint", CheckpointFileName(best.step)},
               {"best_model_digest", ModelDigest(best.model)},
               {"model_config_digest", ugcbench::ConfigDigest(best.model.config())}};
  r.outputs.push_back((std::filesystem::path(o.out_dir) / "learning_curve.csv").string());
  r.outputs.push_back((std::filesystem::path(o.out_dir) / "best_checkpoint").string());
  p << "best checkpoint " << CheckpointFileName(best.step) << " (loss "
    << std::setprecision(8) << best.validation_loss << ", digest " << ModelDigest(best.model)
    << ")\n";
  return r;
}

StudentModel LoadStudent(const std::string &model_path, const std::string &ckpt_dir,
                         std::vector<std::string> *inputs) {
  if (!model_path.empty()) {
    inputs->push_back(model_path);
    return LoadModel(model_path);
  }
  if (ckpt_dir.empty()) throw ValidationError("give --model or --ckpt-dir");
  inputs->push_back(ckpt_dir);
  return LoadBestCheckpoint(ckpt_dir);
}

Report RunValidate(const TrainOptions &o, const std::string &model_path, const std::string &ckpt_dir,
                   Context &ctx) {
  Report r;
  r.command = "validate";
  const auto model = LoadStudent(model_path, ckpt_dir, &r.inputs);
  const auto pairs = ReadPairs(o.pairs, o.std_path, o.ugc_path);
  for (const auto &p : {o.pairs, o.std_path, o.ugc_path})
    if (!p.empty()) r.inputs.push_back(p);
  const auto teacher = TeacherFor(pairs, o.teacher_emb, o.synthetic_teacher_dim, o.teacher_seed,
                                  ctx.global.threads, &r.inputs);
  const double loss = ValidationLoss(model, teacher, pairs, ctx.global.threads);
  const double cos = AvgPairwiseCosineDistance(EncodeCorpus(model, UgcSide(pairs), ctx.global.threads),
                                               EncodeCorpus(model, StdSide(pairs), ctx.global.threads),
                                               ctx.global.threads);
  r.config = {{"model_digest", ModelDigest(model)}, {"pairs", pairs.size()},
              {"teacher", o.teacher_emb.empty() ? Json("synthetic") : Json(o.teacher_emb)},
              {"teacher_seed", o.teacher_seed}};
  r.results = {{"validation_loss", loss}, {"ugc_std_cos_distance", cos}, {"pairs", pairs.size()}};
  ctx.Print() << "validation loss " << std::setprecision(10) << loss
              << "\nugc-std cos distance " << Fixed(cos, 4) << '\n';
  return r;
}

Report RunEmbed(const std::string &in, const std::string &out_path, const std::string &model_path,
                const std::string &ckpt_dir, uint64_t synthetic_dim, uint64_t teacher_seed,
                Context &ctx) {
  Report r;
  r.command = "embed";
  const auto sentences = ReadLines(in);
  r.inputs.push_back(in);
  EmbeddingMatrix e;
  if (synthetic_dim > 0) {
    e = SyntheticTeacher(teacher_seed, synthetic_dim).EmbedAll(sentences, ctx.global.threads);
    r.config = {{"encoder", "synthetic"}, {"dim", synthetic_dim}, {"teacher_seed", teacher_seed}};
    r.seeds = {teacher_seed};
  } else {
    const auto model = LoadStudent(model_path, ckpt_dir, &r.inputs);
    e = EncodeCorpus(model, sentences, ctx.global.threads);
    r.config = {{"encoder", "student"}, {"model_digest", ModelDigest(model)}};
  }
  WriteEmbeddings(e, out_path);
  r.config["input"] = in;
  r.outputs = {out_path, SidecarPath(out_path)};
  r.results = {{"rows", e.rows()}, {"dim", e.cols()}};
  ctx.Print() << "wrote " << e.rows() << " x " << e.cols() << " embeddings to " << out_path << '\n';
  return r;
}

// ---- pca ----

Report RunPca(const std::string &emb_path, const std::string &labels_path, const std::string &out_csv,
              const std::string &out_svg, Context &ctx) {
  Report r;
  r.command = "pca";
  const auto e = ReadEmbeddings(emb_path);
  const auto labels = ReadLines(labels_path);
  if (labels.size() != e.rows())
    throw ValidationError("labels/embeddings alignment error: " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(e.rows()) + " rows");
  const auto pca = Pca2d(e);
  const double rho = DistancePreservation(e, pca.points);
  std::ofstream csv(out_csv, std::ios::binary | std::ios::trunc);
  if (!csv) throw IoError("cannot write " + out_csv);
  csv << "x,y,label\n" << std::setprecision(17);
  for (size_t i = 0; i < pca.points.size(); ++i)
    csv << pca.points[i][0] << ',' << pca.points[i][1] << ',' << labels[i] << '\n';
  if (!csv) throw IoError("write failed for " + out_csv);
  r.outputs.push_back(out_csv);
  if (!out_svg.empty()) {
    std::ofstream svg(out_svg, std::ios::binary | std::ios::trunc);
    if (!svg) throw IoError("cannot write " + out_svg);
    svg << ScatterSvg(pca.points, labels,
                      "PC1 (" + Fixed(100.0 * pca.explained_ratio[0], 1) + "%)",
                      "PC2 (" + Fixed(100.0 * pca.explained_ratio[1], 1) + "%)");
    r.outputs.push_back(out_svg);
  }
  r.inputs = {emb_path, labels_path};
  r.config = {{"emb", emb_path}, {"labels", labels_path}};
  r.results = {{"explained_variance", pca.explained_variance},
               {"explained_ratio", pca.explained_ratio},
               {"total_variance", pca.total_variance},
               {"distance_spearman", rho}};
  ctx.Print() << "explained variance " << std::setprecision(6) << pca.explained_variance[0] << ", "
              << pca.explained_variance[1] << " (" << Fixed(100.0 * pca.explained_ratio[0], 1)
              << "%, " << Fixed(100.0 * pca.explained_ratio[1], 1) << "%)\n"
              << "distance-preservation Spearman r " << Fixed(rho, 6) << '\n';
  return r;
}

// ---- prep ----

struct PrepOptions {
  std::string in, out;
  bool split = false, no_lowercase = false, no_punct = false, no_nonprintable = false;
  double threshold = 0.9;
};

Report RunPrep(const PrepOptions &o, Context &ctx) {
  Report r;
  r.command = "prep";
  PreprocessConfig config;
  config.lowercase = !o.no_lowercase;
  config.normalize_punctuation = !o.no_punct;
  config.remove_nonprintable = !o.no_nonprintable;
  std::vector<std::string> kept;
  size_t seen = 0, dropped = 0;
  for (const auto &line : ReadLines(o.in)) {
    std::vector<std::string> units;
    if (o.split) {
      units = SplitSentences(ReplaceHtmlLineBreaks(line));
    } else {
      units = {line};
    }
    for (const auto &u : units) {
      ++seen;
      std::string s = Preprocess(u, config);
      if (KeepEnglish(s, o.threshold)) kept.push_back(std::move(s));
      else ++dropped;
    }
  }
  WriteLines(o.out, kept);
  r.inputs = {o.in};
  r.outputs = {o.out};
  r.config = {{"input", o.in},
              {"split", o.split},
              {"lowercase", config.lowercase},
              {"normalize_punctuation", config.normalize_punctuation},
              {"remove_nonprintable", config.remove_nonprintable},
              {"threshold", o.threshold}};
  r.results = {{"sentences", seen}, {"kept", kept.size()}, {"dropped", dropped}};
  ctx.Print() << "sentences " << seen << "  kept " << kept.size() << "  dropped " << dropped << '\n';
  return r;
}

void AddPairEvalOptions(CLI::App *sub, PairEvalOptions *o, bool margin) {
  sub->add_option("--src-emb", o->src_emb, "Source embeddings (may contain {seed})")->required();
  sub->add_option("--tgt-emb", o->tgt_emb, "Target embeddings (may contain {seed})")->required();
  sub->add_option("--src-text", o->src_text, "Source corpus, for a row-count check");
  sub->add_option("--tgt-text", o->tgt_text, "Target corpus, for a row-count check");
  sub->add_option("--seeds", o->seeds, "Comma-separated seeds substituted for {seed}");
  sub->add_option("--baseline", o->baseline, "Baseline report or score file for a t-test");
  if (margin) {
    sub->add_option("--k", o->k, "Neighbourhood size")->capture_default_str();
    sub->add_option("--margin", o->margin, "ratio | distance | absolute")->capture_default_str();
    sub->add_option("--hard-neg", o->hard_neg, "Extra candidate embeddings appended to the pool");
  }
}

void AddTrainInputs(CLI::App *sub, TrainOptions *o) {
  sub->add_option("--pairs", o->pairs, "TSV of std<TAB>ugc pairs");
  sub->add_option("--std", o->std_path, "Standard side, one sentence per line");
  sub->add_option("--ugc", o->ugc_path, "UGC side, aligned with --std");
  sub->add_option("--teacher-emb", o->teacher_emb, "Teacher embeddings of the standard side");
  sub->add_option("--synthetic-teacher", o->synthetic_teacher_dim,
                  "Use the built-in synthetic teacher with this dimension");
  sub->add_option("--teacher-seed", o->teacher_seed, "Seed of the synthetic teacher")
      ->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  ctx.start = std::chrono::steady_clock::now();

  CLI::App app{"Robustness benchmark toolkit for sentence embeddings on user-generated content",
               "ugcbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", ctx.global.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", ctx.global.threads, "Worker threads (0 = all)")->capture_default_str();
  app.add_option("--json-out", ctx.global.json_out, "Write the JSON report here");
  app.add_option("--manifest-out", ctx.global.manifest_out, "Write the run manifest here");
  app.add_flag("--quiet", ctx.global.quiet, "Suppress tables and the manifest on stderr");

  AugmentOptions aug;
  auto *augment = app.add_subcommand("augment", "Create aligned standard/UGC corpora");
  augment->add_option("--in", aug.in, "Input corpus")->required();
  augment->add_option("--out-std", aug.out_std, "Output standard side")->required();
  augment->add_option("--out-ugc", aug.out_ugc, "Output UGC side")->required();
  augment->add_option("--out-manifest", aug.out_manifest, "Per-sentence applied transforms");
  augment->add_option("--p-all", aug.p_all, "Selection probability per transform")->capture_default_str();
  augment->add_option("--chunk-size", aug.chunk_size, "Sentences per seed chunk")->capture_default_str();
  augment->add_option("--transforms", aug.transforms, "mix_all or a comma-separated id list")
      ->capture_default_str();
  augment->add_option("--data-dir", aug.data_dir, "Lexicon directory root");
  augment->add_option("--p", aug.p, "Probability override for --transforms id lists");

  std::string stats_std, stats_ugc;
  auto *stats = app.add_subcommand("stats", "Corpus token/type statistics");
  stats->add_option("--std", stats_std, "Standard corpus")->required();
  stats->add_option("--ugc", stats_ugc, "UGC corpus");

  auto *eval = app.add_subcommand("eval", "Metric evaluation");
  eval->require_subcommand(1);
  PairEvalOptions xo, co;
  auto *xsim = eval->add_subcommand("xsim", "Margin-based similarity search error rate");
  AddPairEvalOptions(xsim, &xo, true);
  auto *cosdist = eval->add_subcommand("cosdist", "Average pairwise cosine distance");
  AddPairEvalOptions(cosdist, &co, false);
  std::string q_values, q_probs = "0,0.25,0.5,0.75,1";
  auto *quant = eval->add_subcommand("quantiles", "Linear-interpolation quantiles");
  quant->add_option("--values", q_values, "One value per line")->required();
  quant->add_option("--probs", q_probs, "Comma-separated probabilities")->capture_default_str();
  std::string t_a, t_b;
  auto *ttest = eval->add_subcommand("ttest", "Welch two-sample t-test");
  ttest->add_option("--a", t_a, "Score file or JSON report")->required();
  ttest->add_option("--b", t_b, "Score file or JSON report")->required();
  std::string s_src, s_tgt, s_gold;
  auto *sts = eval->add_subcommand("sts", "Spearman correlation of pair cosines with gold scores");
  sts->add_option("--src-emb", s_src, "First sentences")->required();
  sts->add_option("--tgt-emb", s_tgt, "Second sentences")->required();
  sts->add_option("--gold", s_gold, "Gold similarity, one per line")->required();
  std::string a_scores, a_src, a_tgt, a_labels;
  auto *ap = eval->add_subcommand("ap", "Average precision");
  ap->add_option("--scores", a_scores, "Scores, one per line");
  ap->add_option("--src-emb", a_src, "Score pairs by cosine instead");
  ap->add_option("--tgt-emb", a_tgt, "Score pairs by cosine instead");
  ap->add_option("--labels", a_labels, "0/1 labels, one per line")->required();

  std::string h_in, h_out, h_gaz;
  int h_per = kDefaultPerPerturber;
  auto *hardneg = app.add_subcommand("hardneg", "Generate hard-negative candidates");
  hardneg->add_option("--in", h_in, "Target sentences")->required();
  hardneg->add_option("--out", h_out, "Originals followed by negatives")->required();
  hardneg->add_option("--per-perturber", h_per, "Attempts per perturber")->capture_default_str();
  hardneg->add_option("--gazetteer", h_gaz, "Entity list (default: data dir)");

  TrainOptions to;
  auto *train = app.add_subcommand("train", "Distil a student encoder");
  AddTrainInputs(train, &to);
  train->add_option("--dev-pairs", to.dev_pairs, "Dev TSV");
  train->add_option("--dev-std", to.dev_std, "Dev standard side");
  train->add_option("--dev-ugc", to.dev_ugc, "Dev UGC side");
  train->add_option("--dev-teacher-emb", to.dev_teacher_emb, "Dev teacher embeddings");
  train->add_option("--mode", to.mode, "word | char")->capture_default_str();
  train->add_option("--config", to.config_path, "JSON with student/trainer settings");
  train->add_option("--out-dir", to.out_dir, "Checkpoint directory")->required();
  auto *o_lr = train->add_option("--lr", to.train.learning_rate, "Learning rate");
  auto *o_steps = train->add_option("--steps", to.train.max_steps, "Optimizer steps");
  auto *o_batch = train->add_option("--batch-size", to.train.batch_size, "Pairs per batch");
  auto *o_tokens = train->add_option("--max-tokens", to.train.max_tokens_per_batch,
                                     "Feature budget per batch (overrides --batch-size)");
  auto *o_warm = train->add_option("--warmup", to.train.warmup_steps, "Warm-up steps");
  auto *o_ckpt = train->add_option("--checkpoint-every", to.train.checkpoint_every,
                                   "Checkpoint period in steps");
  auto *o_clip = train->add_option("--clip-norm", to.train.clip_norm, "Gradient clip norm");
  auto *o_buckets = train->add_option("--buckets", to.student.buckets, "Feature table rows");
  auto *o_hidden = train->add_option("--hidden", to.student.hidden, "Feature dimension");

  TrainOptions vo;
  std::string v_model, v_ckpt;
  auto *validate = app.add_subcommand("validate", "Validation loss of a trained student");
  AddTrainInputs(validate, &vo);
  validate->add_option("--model", v_model, "Model file");
  validate->add_option("--ckpt-dir", v_ckpt, "Checkpoint directory (uses the best checkpoint)");

  std::string e_in, e_out, e_model, e_ckpt;
  uint64_t e_dim = 0, e_seed = 0;
  auto *embed = app.add_subcommand("embed", "Encode sentences to an embedding file");
  embed->add_option("--in", e_in, "Sentences")->required();
  embed->add_option("--out", e_out, "Embedding file")->required();
  embed->add_option("--model", e_model, "Student model file");
  embed->add_option("--ckpt-dir", e_ckpt, "Checkpoint directory (uses the best checkpoint)");
  embed->add_option("--synthetic-teacher", e_dim, "Use the synthetic teacher with this dimension");
  embed->add_option("--teacher-seed", e_seed, "Seed of the synthetic teacher")->capture_default_str();

  std::string p_emb, p_labels, p_csv, p_svg;
  auto *pca = app.add_subcommand("pca", "2-D principal component projection");
  pca->add_option("--emb", p_emb, "Embeddings")->required();
  pca->add_option("--labels", p_labels, "One label per row")->required();
  pca->add_option("--out-csv", p_csv, "x,y,label CSV")->required();
  pca->add_option("--out-svg", p_svg, "Scatter plot");

  PrepOptions po;
  auto *prep = app.add_subcommand("prep", "Preprocess and filter a raw corpus");
  prep->add_option("--in", po.in, "Raw text")->required();
  prep->add_option("--out", po.out, "Cleaned corpus")->required();
  prep->add_flag("--split", po.split, "Replace <br> tags and split sentences first");
  prep->add_flag("--no-lowercase", po.no_lowercase, "Keep case");
  prep->add_flag("--no-punct", po.no_punct, "Skip punctuation normalization");
  prep->add_flag("--no-nonprintable", po.no_nonprintable, "Keep non-printable characters");
  prep->add_option("--filter-threshold", po.threshold, "Minimum common-character share")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Report report;
    if (*augment) {
      report = RunAugment(aug, ctx);
    } else if (*stats) {
      report = RunStats(stats_std, stats_ugc, ctx);
    } else if (*xsim) {
      report = RunEvalXsim(xo, ctx);
    } else if (*cosdist) {
      report = RunEvalCosdist(co, ctx);
    } else if (*quant) {
      report = RunEvalQuantiles(q_values, q_probs, ctx);
    } else if (*ttest) {
      report = RunEvalTtest(t_a, t_b, ctx);
    } else if (*sts) {
      report = RunEvalSts(s_src, s_tgt, s_gold, ctx);
    } else if (*ap) {
      report = RunEvalAp(a_scores, a_src, a_tgt, a_labels, ctx);
    } else if (*hardneg) {
      report = RunHardneg(h_in, h_out, h_per, h_gaz, ctx);
    } else if (*train) {
      if (!to.config_path.empty()) {
        // File values first, then any flag given explicitly on the command line.
        TrainOptions flags = to;
        ApplyJsonConfig(to.config_path, &to.student, &to.train, &to.mode);
        if (o_lr->count()) to.train.learning_rate = flags.train.learning_rate;
        if (o_steps->count()) to.train.max_steps = flags.train.max_steps;
        if (o_batch->count()) to.train.batch_size = flags.train.batch_size;
        if (o_tokens->count()) to.train.max_tokens_per_batch = flags.train.max_tokens_per_batch;
        if (o_warm->count()) to.train.warmup_steps = flags.train.warmup_steps;
        if (o_ckpt->count()) to.train.checkpoint_every = flags.train.checkpoint_every;
        if (o_clip->count()) to.train.clip_norm = flags.train.clip_norm;
        if (o_buckets->count()) to.student.buckets = flags.student.buckets;
        if (o_hidden->count()) to.student.hidden = flags.student.hidden;
        if (train->get_option("--mode")->count()) to.mode = flags.mode;
        report.inputs.push_back(to.config_path);
      }
      auto inputs = report.inputs;
      report = RunTrain(to, ctx);
      report.inputs.insert(report.inputs.end(), inputs.begin(), inputs.end());
    } else if (*validate) {
      report = RunValidate(vo, v_model, v_ckpt, ctx);
    } else if (*embed) {
      report = RunEmbed(e_in, e_out, e_model, e_ckpt, e_dim, e_seed, ctx);
    } else if (*pca) {
      report = RunPca(p_emb, p_labels, p_csv, p_svg, ctx);
    } else if (*prep) {
      report = RunPrep(po, ctx);
    }
    FinishReport(report, ctx.global, ctx.start, err);
    return 0;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ugcbench::cli

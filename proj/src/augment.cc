// src/augment.cc

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

#include "ugcbench/augment.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>

#include <omp.h>

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

constexpr std::array<std::string_view, kNumTransforms> kNames = {
    "abr1", "abr2", "abr3", "cont", "dysl", "fing",
    "homo", "leet", "slng", "spac", "spel", "week"};

CharMap BuildQwerty() {
  const std::array<std::string_view, 3> rows = {"qwertyuiop", "asdfghjkl", "zxcvbnm"};
  CharMap map;
  auto at = [&](int r, int c) -> char32_t {
    if (r < 0 || r > 2 || c < 0 || c >= static_cast<int>(rows[r].size())) return 0;
    return static_cast<char32_t>(rows[r][c]);
  };
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      // Each row is shifted right by about half a key relative to the one above.
      std::array<char32_t, 6> cand = {at(r, c - 1), at(r, c + 1), at(r - 1, c),
                                      at(r - 1, c + 1), at(r + 1, c - 1), at(r + 1, c)};
      std::u32string neighbors;
      for (char32_t n : cand)
        if (n != 0) neighbors.push_back(n);
      map[static_cast<char32_t>(rows[r][c])] = neighbors;
    }
  }
  return map;
}

CharMap BuildLeet() {
  const std::array<std::pair<char, std::string_view>, 26> table = {{
      {'a', "4@A"}, {'b', "8B"},  {'c', "(C"},  {'d', "D"},   {'e', "3E"},  {'f', "F"},
      {'g', "69G"}, {'h', "#H"},  {'i', "1!I"}, {'j', "J"},   {'k', "K"},   {'l', "1|L"},
      {'m', "M"},   {'n', "N"},   {'o', "0O"},  {'p', "P"},   {'q', "9Q"},  {'r', "R"},
      {'s', "5$S"}, {'t', "7+T"}, {'u', "U"},   {'v', "V"},   {'w', "W"},   {'x', "%X"},
      {'y', "Y"},   {'z', "2Z"},
  }};
  CharMap map;
  for (const auto &[c, glyphs] : table) {
    std::u32string g;
    for (char x : glyphs) g.push_back(static_cast<char32_t>(x));
    map[static_cast<char32_t>(c)] = g;
  }
  return map;
}

void CheckProbability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError(std::string(what) + " must be in [0,1], got " + std::to_string(p));
}

// Per-character substitution shared by fing and leet.
std::string SubstituteChars(std::string_view sentence, double p, const CharMap &map,
                            bool keep_case, RandomStream &rng) {
  std::u32string text = DecodeUtf8(sentence);
  for (char32_t &c : text) {
    auto it = map.find(ToLower(c));
    if (it == map.end() || it->second.empty()) continue;
    if (!rng.Bernoulli(p)) continue;
    char32_t glyph = it->second[rng.Below(static_cast<uint32_t>(it->second.size()))];
    c = keep_case && IsUpper(c) ? ToUpper(glyph) : glyph;
  }
  return EncodeUtf8(text);
}

template <typename MakePlan>
std::vector<SentencePair> RunCorpus(std::span<const std::string> corpus, uint64_t global_seed,
                                    size_t chunk_size, const AugmentResources &resources,
                                    int threads, MakePlan make_plan) {
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");
  const auto n = static_cast<int64_t>(corpus.size());
  std::vector<SentencePair> out(corpus.size());
  std::exception_ptr error;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 256)
  for (int64_t i = 0; i < n; ++i) {
    try {
      RandomStream rng = SentenceStream(global_seed, chunk_size, static_cast<size_t>(i));
      MixAllPlan plan = make_plan(rng);
      out[i] = ExecutePlan(corpus[i], plan, resources);
    } catch (...) {
#pragma omp critical(ugcbench_augment_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

const std::array<TransformId, kNumTransforms> &AllTransforms() {
  static const std::array<TransformId, kNumTransforms> ids = [] {
    std::array<TransformId, kNumTransforms> a{};
    for (size_t i = 0; i < kNumTransforms; ++i) a[i] = static_cast<TransformId>(i);
    return a;
  }();
  return ids;
}

std::string_view TransformName(TransformId id) { return kNames[static_cast<size_t>(id)]; }

std::optional<TransformId> ParseTransformId(std::string_view name) {
  for (size_t i = 0; i < kNumTransforms; ++i)
    if (kNames[i] == name) return static_cast<TransformId>(i);
  return std::nullopt;
}

std::string ValidTransformNames() {
  std::string s;
  for (auto name : kNames) {
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

bool IsLexical(TransformId id) {
  return id != TransformId::kFing && id != TransformId::kLeet && id != TransformId::kSpac;
}

LexiconDirection DefaultDirection(TransformId id) {
  switch (id) {
    case TransformId::kAbr3:
    case TransformId::kCont:
    case TransformId::kDysl:
    case TransformId::kHomo:
    case TransformId::kWeek:
      return LexiconDirection::kSwapBothWays;
    default:
      return LexiconDirection::kOneWay;
  }
}

void TransformSpec::Validate() const {
  if (p) CheckProbability(*p, std::string(TransformName(id)) + " p");
  if (id == TransformId::kSpac) {
    CheckProbability(p_add, "spac p_add");
    CheckProbability(p_remove, "spac p_remove");
  } else if (!IsLexical(id) && !p) {
    throw ValidationError(std::string(TransformName(id)) + " requires a probability");
  }
}

TransformSpec DefaultSpec(TransformId id) {
  TransformSpec s;
  s.id = id;
  switch (id) {
    case TransformId::kAbr1: s.p = 0.1; break;
    case TransformId::kFing: s.p = 0.05; break;
    case TransformId::kHomo: s.p = 0.5; break;
    case TransformId::kLeet: s.p = 0.1; break;
    case TransformId::kSpel: s.p = 0.2; break;
    case TransformId::kSpac:
      s.p_add = 0.05;
      s.p_remove = 0.1;
      break;
    default: break;
  }
  return s;
}

const CharMap &QwertyNeighbors() {
  static const CharMap map = BuildQwerty();
  return map;
}

const CharMap &DefaultLeetMap() {
  static const CharMap map = BuildLeet();
  return map;
}

std::string DefaultDataDir() {
  const char *env = std::getenv("UGCBENCH_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return UGCBENCH_DEFAULT_DATA_DIR;
}

AugmentResources AugmentResources::Load(const std::string &data_dir) {
  AugmentResources r;
  for (TransformId id : AllTransforms()) {
    if (!IsLexical(id)) continue;
    std::string name(TransformName(id));
    r.lexicons[static_cast<size_t>(id)] =
        LoadLexicon(data_dir + "/lexicons/" + name + ".tsv", name, DefaultDirection(id));
  }
  return r;
}

std::string ApplyLexical(std::string_view sentence, const Lexicon &lexicon,
                         std::optional<double> p, RandomStream &rng) {
  if (p) CheckProbability(*p, "lexical p");
  if (sentence.empty() || lexicon.empty()) return std::string(sentence);
  std::u32string text = DecodeUtf8(sentence);
  auto matches = lexicon.FindMatches(text);
  if (matches.empty()) return std::string(sentence);

  std::u32string out;
  out.reserve(text.size() + 16);
  size_t pos = 0;
  for (const auto &m : matches) {
    if (p && !rng.Bernoulli(*p)) continue;
    out.append(text, pos, m.begin - pos);
    std::u32string repl = *m.replacement;
    if (!repl.empty() && IsUpper(text[m.begin])) repl[0] = ToUpper(repl[0]);
    out += repl;
    pos = m.end;
  }
  out.append(text, pos, std::u32string::npos);
  return EncodeUtf8(out);
}

std::string ButterFingers(std::string_view sentence, double p, const CharMap &keyboard,
                          RandomStream &rng) {
  CheckProbability(p, "fing p");
  return SubstituteChars(sentence, p, keyboard, /*keep_case=*/true, rng);
}

std::string Leet(std::string_view sentence, double p, const CharMap &leet_map,
                 RandomStream &rng) {
  CheckProbability(p, "leet p");
  return SubstituteChars(sentence, p, leet_map, /*keep_case=*/false, rng);
}

std::string WhitespacePerturb(std::string_view sentence, double p_add, double p_remove,
                              RandomStream &rng) {
  CheckProbability(p_add, "spac p_add");
  CheckProbability(p_remove, "spac p_remove");
  std::u32string text = DecodeUtf8(sentence);
  std::u32string out;
  out.reserve(text.size() + 8);
  for (size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i];
    if (c == ' ') {
      if (!rng.Bernoulli(p_remove)) out.push_back(c);
      continue;
    }
    out.push_back(c);
    // Never after the last character and never next to an existing space.
    if (IsWhitespace(c) || i + 1 == text.size() || IsWhitespace(text[i + 1])) continue;
    if (rng.Bernoulli(p_add)) out.push_back(' ');
  }
  return EncodeUtf8(out);
}

std::string ApplyTransform(const TransformSpec &spec, std::string_view sentence,
                           const AugmentResources &resources, RandomStream &rng) {
  switch (spec.id) {
    case TransformId::kFing:
      return ButterFingers(sentence, spec.p.value_or(0.0), resources.keyboard, rng);
    case TransformId::kLeet:
      return Leet(sentence, spec.p.value_or(0.0), resources.leet, rng);
    case TransformId::kSpac:
      return WhitespacePerturb(sentence, spec.p_add, spec.p_remove, rng);
    default:
      return ApplyLexical(sentence, resources.lexicon(spec.id), spec.p, rng);
  }
}

std::array<TransformSpec, kNumTransforms> MixAllConfig::DefaultTransforms() {
  std::array<TransformSpec, kNumTransforms> specs;
  for (TransformId id : AllTransforms()) specs[static_cast<size_t>(id)] = DefaultSpec(id);
  return specs;
}

void MixAllConfig::Validate() const {
  CheckProbability(p_all, "p_all");
  double total = 0.0;
  for (double q : scale_probs) {
    CheckProbability(q, "scale probability");
    total += q;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("scale_probs must sum to 1");
  for (size_t i = 0; i < kNumTransforms; ++i) {
    if (transforms[i].id != static_cast<TransformId>(i))
      throw ValidationError("transforms must be listed in canonical order");
    transforms[i].Validate();
  }
}

double ScaleProbability(double p_d, RandomStream &rng) {
  return ScaleProbability(p_d, {0.5, 1.0, 1.5}, {0.25, 0.5, 0.25}, rng);
}

double ScaleProbability(double p_d, const std::array<double, 3> &factors,
                        const std::array<double, 3> &probs, RandomStream &rng) {
  CheckProbability(p_d, "p_d");
  double u = rng.NextDouble();
  size_t pick = 2;
  if (u < probs[0]) {
    pick = 0;
  } else if (u < probs[0] + probs[1]) {
    pick = 1;
  }
  return std::clamp(factors[pick] * p_d, 0.0, 1.0);
}

MixAllPlan PlanMixAll(const MixAllConfig &config, RandomStream &rng) {
  MixAllPlan plan;
  for (const TransformSpec &spec : config.transforms)
    if (rng.Bernoulli(config.p_all)) plan.steps.push_back(spec);
  rng.Shuffle(plan.steps);
  for (TransformSpec &step : plan.steps) {
    if (step.p) step.p = ScaleProbability(*step.p, config.scale_factors, config.scale_probs, rng);
    if (step.id == TransformId::kSpac) {
      step.p_add = ScaleProbability(step.p_add, config.scale_factors, config.scale_probs, rng);
      step.p_remove =
          ScaleProbability(step.p_remove, config.scale_factors, config.scale_probs, rng);
    }
  }
  plan.stream_seed = rng.NextU64();
  return plan;
}

MixAllPlan FixedPlan(std::vector<TransformSpec> steps, RandomStream &rng) {
  MixAllPlan plan;
  plan.steps = std::move(steps);
  plan.stream_seed = rng.NextU64();
  return plan;
}

SentencePair ExecutePlan(std::string_view sentence, const MixAllPlan &plan,
                         const AugmentResources &resources) {
  SentencePair pair;
  pair.std = std::string(sentence);
  pair.ugc = pair.std;
  for (const TransformSpec &step : plan.steps) {
    RandomStream stream = plan.StepStream(step.id);
    std::string next = ApplyTransform(step, pair.ugc, resources, stream);
    if (next != pair.ugc) {
      pair.applied.push_back(step.id);
      pair.ugc = std::move(next);
    }
  }
  return pair;
}

std::string ReplayApplied(std::string_view sentence, const MixAllPlan &plan,
                          std::span<const TransformId> applied,
                          const AugmentResources &resources) {
  std::string text(sentence);
  for (const TransformSpec &step : plan.steps) {
    if (std::find(applied.begin(), applied.end(), step.id) == applied.end()) continue;
    RandomStream stream = plan.StepStream(step.id);
    text = ApplyTransform(step, text, resources, stream);
  }
  return text;
}

SentencePair MixAll(std::string_view sentence, const MixAllConfig &config,
                    const AugmentResources &resources, RandomStream &rng) {
  MixAllPlan plan = PlanMixAll(config, rng);
  return ExecutePlan(sentence, plan, resources);
}

size_t NumChunks(size_t n, size_t chunk_size) {
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");
  return (n + chunk_size - 1) / chunk_size;
}

RandomStream SentenceStream(uint64_t global_seed, size_t chunk_size, size_t index) {
  uint64_t chunk_seed = MixSeed(global_seed, index / chunk_size);
  return RandomStream::Derive(chunk_seed, index % chunk_size);
}

std::vector<SentencePair> AugmentCorpus(std::span<const std::string> corpus,
                                        const MixAllConfig &config,
                                        const AugmentResources &resources, size_t chunk_size,
                                        int threads) {
  config.Validate();
  return RunCorpus(corpus, config.global_seed, chunk_size, resources, threads,
                   [&](RandomStream &rng) { return PlanMixAll(config, rng); });
}

std::vector<SentencePair> AugmentCorpusFixed(std::span<const std::string> corpus,
                                             std::span<const TransformSpec> steps,
                                             uint64_t global_seed,
                                             const AugmentResources &resources,
                                             size_t chunk_size, int threads) {
  for (const auto &s : steps) s.Validate();
  std::vector<TransformSpec> seq(steps.begin(), steps.end());
  return RunCorpus(corpus, global_seed, chunk_size, resources, threads,
                   [&](RandomStream &rng) { return FixedPlan(seq, rng); });
}

std::vector<SentencePair> AugmentCorpusSerial(std::span<const std::string> corpus,
                                              const MixAllConfig &config,
                                              const AugmentResources &resources,
                                              size_t chunk_size) {
  config.Validate();
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");
  std::vector<SentencePair> out;
  out.reserve(corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    RandomStream rng = SentenceStream(config.global_seed, chunk_size, i);
    out.push_back(MixAll(corpus[i], config, resources, rng));
  }
  return out;
}

std::string FormatManifestLine(size_t index, std::span<const TransformId> applied) {
  std::string line = std::to_string(index) + "\t";
  for (size_t i = 0; i < applied.size(); ++i) {
    if (i) line += ",";
    line += TransformName(applied[i]);
  }
  return line;
}

}  // namespace ugcbench

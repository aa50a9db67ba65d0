// include/ugcbench/augment.h

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

#ifndef UGCBENCH_AUGMENT_H_
#define UGCBENCH_AUGMENT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugcbench/lexicon.h"
#include "ugcbench/random.h"

namespace ugcbench {

enum class TransformId : uint8_t {
  kAbr1, kAbr2, kAbr3, kCont, kDysl, kFing, kHomo, kLeet, kSlng, kSpac, kSpel, kWeek
};
inline constexpr size_t kNumTransforms = 12;

const std::array<TransformId, kNumTransforms> &AllTransforms();
std::string_view TransformName(TransformId id);
std::optional<TransformId> ParseTransformId(std::string_view name);
// "abr1, abr2, ..." for error messages.
std::string ValidTransformNames();
bool IsLexical(TransformId id);

// A transform and its probabilities. `p` is absent for lexical transforms
// that replace every match; spac uses p_add/p_remove instead of p.
struct TransformSpec {
  TransformId id = TransformId::kAbr1;
  std::optional<double> p;
  double p_add = 0.0;
  double p_remove = 0.0;

  bool HasProbability() const { return p.has_value() || id == TransformId::kSpac; }
  void Validate() const;
};

// Defaults: abr1 p=0.1, fing p=0.05, homo p=0.5, leet p=0.1,
// spac p_add=0.05 p_remove=0.1, spel p=0.2; the rest always apply.
TransformSpec DefaultSpec(TransformId id);

// Letter -> candidate glyphs. Keys are lowercase ASCII letters.
using CharMap = std::map<char32_t, std::u32string>;
const CharMap &QwertyNeighbors();
const CharMap &DefaultLeetMap();

// Everything the transforms read besides the sentence itself.
struct AugmentResources {
  std::array<Lexicon, kNumTransforms> lexicons;
  CharMap keyboard = QwertyNeighbors();
  CharMap leet = DefaultLeetMap();

  const Lexicon &lexicon(TransformId id) const { return lexicons[static_cast<size_t>(id)]; }
  // Reads <data_dir>/lexicons/<id>.tsv for every lexical transform.
  static AugmentResources Load(const std::string &data_dir);
};

// $UGCBENCH_DATA_DIR when set, otherwise the data/ directory of the source tree.
std::string DefaultDataDir();
LexiconDirection DefaultDirection(TransformId id);

std::string ApplyLexical(std::string_view sentence, const Lexicon &lexicon,
                         std::optional<double> p, RandomStream &rng);
std::string ButterFingers(std::string_view sentence, double p, const CharMap &keyboard,
                          RandomStream &rng);
std::string Leet(std::string_view sentence, double p, const CharMap &leet_map,
                 RandomStream &rng);
std::string WhitespacePerturb(std::string_view sentence, double p_add, double p_remove,
                              RandomStream &rng);
std::string ApplyTransform(const TransformSpec &spec, std::string_view sentence,
                           const AugmentResources &resources, RandomStream &rng);

struct MixAllConfig {
  double p_all = 0.1;
  std::array<TransformSpec, kNumTransforms> transforms = DefaultTransforms();
  std::array<double, 3> scale_factors = {0.5, 1.0, 1.5};
  std::array<double, 3> scale_probs = {0.25, 0.5, 0.25};
  uint64_t global_seed = 0;

  static std::array<TransformSpec, kNumTransforms> DefaultTransforms();
  void Validate() const;
};

// Picks p_d scaled by one of `factors` with the matching probability,
// clamped to [0, 1].
double ScaleProbability(double p_d, RandomStream &rng);
double ScaleProbability(double p_d, const std::array<double, 3> &factors,
                        const std::array<double, 3> &probs, RandomStream &rng);

struct SentencePair {
  std::string std;
  std::string ugc;
  // Transforms that changed the text, in application order.
  std::vector<TransformId> applied;
};

// The random decisions of one mix_all call: selected transforms in
// application order with their rescaled probabilities, plus the seed from
// which each step's private stream is derived.
struct MixAllPlan {
  std::vector<TransformSpec> steps;
  uint64_t stream_seed = 0;

  RandomStream StepStream(TransformId id) const {
    return RandomStream::Derive(stream_seed, static_cast<uint64_t>(id));
  }
};

MixAllPlan PlanMixAll(const MixAllConfig &config, RandomStream &rng);
// A plan applying `steps` in order, unconditionally.
MixAllPlan FixedPlan(std::vector<TransformSpec> steps, RandomStream &rng);
SentencePair ExecutePlan(std::string_view sentence, const MixAllPlan &plan,
                         const AugmentResources &resources);
// Re-applies only the steps listed in `applied`. Reproduces the ugc side of
// the pair ExecutePlan produced.
std::string ReplayApplied(std::string_view sentence, const MixAllPlan &plan,
                          std::span<const TransformId> applied,
                          const AugmentResources &resources);

SentencePair MixAll(std::string_view sentence, const MixAllConfig &config,
                    const AugmentResources &resources, RandomStream &rng);

// Corpus-level driver. Sentence i belongs to chunk i / chunk_size, whose seed
// is MixSeed(global_seed, chunk); the sentence stream is derived from the
// chunk seed and the in-chunk offset. Output is independent of `threads`
// (0 = OpenMP default).
size_t NumChunks(size_t n, size_t chunk_size);
RandomStream SentenceStream(uint64_t global_seed, size_t chunk_size, size_t index);

std::vector<SentencePair> AugmentCorpus(std::span<const std::string> corpus,
                                        const MixAllConfig &config,
                                        const AugmentResources &resources, size_t chunk_size,
                                        int threads = 0);
// Applies a fixed transform sequence to every sentence (per-type runs).
std::vector<SentencePair> AugmentCorpusFixed(std::span<const std::string> corpus,
                                             std::span<const TransformSpec> steps,
                                             uint64_t global_seed,
                                             const AugmentResources &resources,
                                             size_t chunk_size, int threads = 0);
// Single-threaded reference for AugmentCorpus.
std::vector<SentencePair> AugmentCorpusSerial(std::span<const std::string> corpus,
                                              const MixAllConfig &config,
                                              const AugmentResources &resources,
                                              size_t chunk_size);

// `index<TAB>id,id,...` lines.
std::string FormatManifestLine(size_t index, std::span<const TransformId> applied);

}  // namespace ugcbench

#endif  // UGCBENCH_AUGMENT_H_

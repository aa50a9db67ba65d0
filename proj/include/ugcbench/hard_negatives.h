// include/ugcbench/hard_negatives.h

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

#ifndef UGCBENCH_HARD_NEGATIVES_H_
#define UGCBENCH_HARD_NEGATIVES_H_

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

// Named entities grouped by category, e.g. CITY -> {Paris, Rome, ...}.
class Gazetteer {
 public:
  Gazetteer() = default;
  // Throws ValidationError on an empty entry or an entry listed twice.
  void Add(std::string_view category, std::string_view entry);

  bool empty() const { return all_.empty(); }
  size_t size() const { return all_.size(); }
  const std::map<std::string, std::vector<std::string>> &categories() const { return categories_; }
  const std::vector<std::string> &all() const { return all_; }
  // Case-insensitive, token-boundary lookup; a match's replacement is its category.
  const Lexicon &matcher() const { return matcher_; }

 private:
  std::map<std::string, std::vector<std::string>> categories_;
  std::vector<std::string> all_;
  Lexicon matcher_{"gazetteer", LexiconDirection::kOneWay};
};

// `category<TAB>entry` lines, '#' comments.
Gazetteer ParseGazetteer(std::string_view content);
Gazetteer LoadGazetteer(const std::string &path);

// Replaces every digit run with a different run of the same length (no new
// leading zero), and every spelled-out number word with a different word of
// the same kind (units, tens, scales). nullopt if the sentence has no number.
std::optional<std::string> PerturbNumbers(std::string_view sentence, RandomStream &rng);

// Swaps one uniformly chosen causal/contrastive connective with its partner:
// because<->although, so<->but, since<->even though, therefore<->nevertheless.
std::optional<std::string> PerturbCausality(std::string_view sentence, RandomStream &rng);

// Replaces one entity span with a different gazetteer entry. Candidates are
// gazetteer matches (replaced within their category) and runs of capitalized
// tokens after the first word (replaced from the whole gazetteer). Throws
// ValidationError on an empty gazetteer.
std::optional<std::string> PerturbEntities(std::string_view sentence, const Gazetteer &gazetteer,
                                           RandomStream &rng);

inline constexpr int kDefaultPerPerturber = 14;

struct HardNegativeSet {
  std::vector<std::string> originals;
  std::vector<std::vector<std::string>> negatives;  // per original
  double factor = 1.0;  // (originals + negatives) / originals

  size_t total_negatives() const;
  // Originals first (so gold alignment stays the identity), then every
  // negative in original order.
  std::vector<std::string> Flatten() const;
};

// Each target gets `per_perturber` attempts per perturber, with a stream
// derived from (seed, target index). Only successful outputs distinct from the
// original and from each other are kept. per_perturber must be >= 1.
HardNegativeSet BuildHardNegatives(std::span<const std::string> targets, int per_perturber,
                                   const Gazetteer &gazetteer, uint64_t seed);

// Pool growth when every perturber yields on every target: 1 + 3 * per_perturber.
inline double FullYieldFactor(int per_perturber) { return 1.0 + 3.0 * per_perturber; }

}  // namespace ugcbench

#endif  // UGCBENCH_HARD_NEGATIVES_H_

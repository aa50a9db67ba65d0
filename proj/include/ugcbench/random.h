// include/ugcbench/random.h

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

#ifndef UGCBENCH_RANDOM_H_
#define UGCBENCH_RANDOM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace ugcbench {

// SplitMix64 finalizer.
uint64_t SplitMix64(uint64_t x);

// Derives a child seed from (seed, index). Used for chunk seeds, per-sentence
// streams and per-transform sub-streams.
uint64_t MixSeed(uint64_t seed, uint64_t index);

// PCG32 (XSH-RR 64/32), O'Neill's reference seeding.
class RandomStream {
 public:
  RandomStream(uint64_t seed, uint64_t stream);

  // Stream for work item `index` under `seed`.
  static RandomStream Derive(uint64_t seed, uint64_t index);

  uint32_t NextU32();
  uint64_t NextU64();
  // Uniform in [0, 1) with 53 random bits.
  double NextDouble();
  // Uniform in [0, bound); bound must be > 0. Rejection sampling, no modulo bias.
  uint32_t Below(uint32_t bound);
  // True with probability p. p <= 0 never fires, p >= 1 always fires; one
  // draw is consumed either way.
  bool Bernoulli(double p);
  // Standard normal via Box-Muller (consumes two doubles per call).
  double Normal();

  template <typename T>
  void Shuffle(std::vector<T> &v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = Below(static_cast<uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  uint64_t state() const { return state_; }
  uint64_t increment() const { return inc_; }

 private:
  uint64_t state_ = 0;
  uint64_t inc_ = 0;
};

}  // namespace ugcbench

#endif  // UGCBENCH_RANDOM_H_

// tests/support/synthetic_corpus.h

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

#ifndef UGCBENCH_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
#define UGCBENCH_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ugcbench/embedding.h"

namespace ugcbench::testing {

// Template-generated English sentences dense in lexicon keys, numbers,
// weekdays and named entities. Deterministic in (n, seed).
std::vector<std::string> SyntheticSentences(size_t n, uint64_t seed);

// n x d standard-normal matrix.
EmbeddingMatrix RandomMatrix(size_t n, size_t d, uint64_t seed);

// Absolute path of the repository data directory.
std::string DataDir();

// Fresh empty directory under the system temp dir, unique per name and process.
std::string ScratchDir(const std::string &name);

}  // namespace ugcbench::testing

#endif  // UGCBENCH_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

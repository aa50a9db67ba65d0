// include/ugcbench/corpus_io.h

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

#ifndef UGCBENCH_CORPUS_IO_H_
#define UGCBENCH_CORPUS_IO_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ugcbench/embedding.h"

namespace ugcbench {

// Steps run in this order: non-printable removal, punctuation normalization
// (which also collapses whitespace runs and trims), lowercasing.
struct PreprocessConfig {
  bool remove_nonprintable = true;
  bool normalize_punctuation = true;
  bool lowercase = true;
};

// The 12 pinned punctuation mappings.
const std::vector<std::pair<char32_t, std::string_view>> &PunctuationTable();

// Idempotent. Throws ValidationError with the byte offset on invalid UTF-8.
std::string Preprocess(std::string_view sentence, const PreprocessConfig &config = {});

// Share of code points in [A-Za-z0-9], ASCII space and ASCII punctuation.
double CommonCharFraction(std::string_view sentence);
// Keep iff CommonCharFraction >= threshold; empty sentences are dropped.
bool KeepEnglish(std::string_view sentence, double threshold = 0.9);

// <br>, <br/>, <br /> in any case become '\n'.
std::string ReplaceHtmlLineBreaks(std::string_view text);

// Rule-based splitter: breaks after . ! ? (plus closing quotes/brackets) when
// followed by whitespace and an uppercase letter, opening quote or digit,
// and at newlines. A fixed abbreviation list ("Mr.", "e.g.", ...) never ends
// a sentence.
std::vector<std::string> SplitSentences(std::string_view text);

// One sentence per line, LF endings (a trailing CR is stripped on read).
std::vector<std::string> ReadLines(const std::string &path);
void WriteLines(const std::string &path, const std::vector<std::string> &lines);

// Embedding files: headerless little-endian float32, row-major, with a
// `<path>.meta.json` sidecar {"n": rows, "d": cols, "dtype": "f32le"}.
std::string SidecarPath(const std::string &path);
void WriteEmbeddings(const EmbeddingMatrix &m, const std::string &path);
EmbeddingMatrix ReadEmbeddings(const std::string &path);

}  // namespace ugcbench

#endif  // UGCBENCH_CORPUS_IO_H_

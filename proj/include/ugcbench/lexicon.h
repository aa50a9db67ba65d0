// include/ugcbench/lexicon.h

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

#ifndef UGCBENCH_LEXICON_H_
#define UGCBENCH_LEXICON_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ugcbench {

enum class LexiconDirection { kOneWay, kSwapBothWays };

struct LexiconEntry {
  std::string match;
  std::string replacement;
};

// Phrase dictionary used by the replacement-based transforms. Match phrases
// are compared case-insensitively; two phrases equal after lowercasing are
// duplicates. In swap-both-ways lexicons every replacement also maps back to
// its match phrase unless that phrase already has a forward entry.
class Lexicon {
 public:
  struct Match {
    size_t begin;  // code point offsets into the searched text
    size_t end;
    const std::u32string *replacement;
  };

  Lexicon() : Lexicon("", LexiconDirection::kOneWay) {}
  Lexicon(std::string name, LexiconDirection direction);

  // Throws ValidationError on an empty or duplicate match phrase.
  void Add(std::string_view match, std::string_view replacement);

  // Maximal non-overlapping occurrences, leftmost first, longest phrase wins
  // at each position. A match must start and end on token boundaries.
  std::vector<Match> FindMatches(std::u32string_view text) const;

  const std::string &name() const { return name_; }
  LexiconDirection direction() const { return direction_; }
  const std::vector<LexiconEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  struct Node {
    std::vector<std::pair<char32_t, int32_t>> next;  // sorted by code point
    int32_t target = -1;
    bool forward = false;
  };

  int32_t Child(int32_t node, char32_t c) const;
  int32_t InsertPath(const std::u32string &key);
  void Insert(const std::u32string &key, std::u32string replacement, bool forward);

  std::string name_;
  LexiconDirection direction_;
  std::vector<LexiconEntry> entries_;
  std::vector<Node> nodes_;
  std::vector<std::u32string> targets_;
};

// Reads `match<TAB>replacement` lines. Blank lines and lines starting with
// '#' are skipped. Errors carry the 1-based line number.
Lexicon LoadLexicon(const std::string &path, std::string name,
                    LexiconDirection direction = LexiconDirection::kOneWay);
Lexicon ParseLexicon(std::string_view content, std::string name,
                     LexiconDirection direction = LexiconDirection::kOneWay);

// Word character test that also treats an apostrophe between two letters
// ("don't") as part of the word.
bool IsWordAt(std::u32string_view text, size_t i);

}  // namespace ugcbench

#endif  // UGCBENCH_LEXICON_H_

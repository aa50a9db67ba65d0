// src/lexicon.cc

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

#include "ugcbench/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

// Lowercases and collapses internal whitespace to single spaces.
std::u32string NormalizeKey(std::string_view phrase) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : DecodeUtf8(phrase)) {
    if (IsWhitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ToLower(c));
  }
  return out;
}

bool IsApostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

}  // namespace

bool IsWordAt(std::u32string_view text, size_t i) {
  char32_t c = text[i];
  if (IsWordChar(c)) return true;
  return IsApostrophe(c) && i > 0 && i + 1 < text.size() && IsWordChar(text[i - 1]) &&
         IsWordChar(text[i + 1]);
}

Lexicon::Lexicon(std::string name, LexiconDirection direction)
    : name_(std::move(name)), direction_(direction), nodes_(1) {}

int32_t Lexicon::Child(int32_t node, char32_t c) const {
  const auto &next = nodes_[node].next;
  auto it = std::lower_bound(next.begin(), next.end(), c,
                             [](const auto &p, char32_t v) { return p.first < v; });
  if (it == next.end() || it->first != c) return -1;
  return it->second;
}

int32_t Lexicon::InsertPath(const std::u32string &key) {
  int32_t node = 0;
  for (char32_t c : key) {
    int32_t child = Child(node, c);
    if (child < 0) {
      child = static_cast<int32_t>(nodes_.size());
      nodes_.emplace_back();
      auto &next = nodes_[node].next;
      auto it = std::lower_bound(next.begin(), next.end(), c,
                                 [](const auto &p, char32_t v) { return p.first < v; });
      next.insert(it, {c, child});
    }
    node = child;
  }
  return node;
}

void Lexicon::Insert(const std::u32string &key, std::u32string replacement, bool forward) {
  int32_t node = InsertPath(key);
  Node &n = nodes_[node];
  if (n.target >= 0 && (n.forward || !forward)) return;
  if (n.target >= 0) {
    targets_[n.target] = std::move(replacement);
  } else {
    n.target = static_cast<int32_t>(targets_.size());
    targets_.push_back(std::move(replacement));
  }
  n.forward = forward;
}

void Lexicon::Add(std::string_view match, std::string_view replacement) {
  std::u32string key = NormalizeKey(match);
  if (key.empty()) throw ValidationError("lexicon '" + name_ + "': empty match phrase");
  int32_t node = 0;
  for (char32_t c : key) {
    node = Child(node, c);
    if (node < 0) break;
  }
  if (node >= 0 && nodes_[node].target >= 0 && nodes_[node].forward)
    throw ValidationError("lexicon '" + name_ + "': duplicate entry '" + std::string(match) + "'");

  entries_.push_back({std::string(match), std::string(replacement)});
  Insert(key, DecodeUtf8(replacement), true);
  if (direction_ == LexiconDirection::kSwapBothWays) {
    std::u32string reverse_key = NormalizeKey(replacement);
    if (!reverse_key.empty()) Insert(reverse_key, DecodeUtf8(match), false);
  }
}

std::vector<Lexicon::Match> Lexicon::FindMatches(std::u32string_view text) const {
  std::vector<Match> matches;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    bool start_ok = i == 0 || !IsWordAt(text, i - 1) || !IsWordAt(text, i);
    if (start_ok) {
      int32_t node = 0;
      size_t best_end = 0;
      int32_t best_target = -1;
      for (size_t j = i; j < n; ++j) {
        node = Child(node, ToLower(text[j]));
        if (node < 0) break;
        if (nodes_[node].target < 0) continue;
        size_t e = j + 1;
        bool end_ok = e == n || !IsWordAt(text, e) || !IsWordAt(text, e - 1);
        if (end_ok) {
          best_end = e;
          best_target = nodes_[node].target;
        }
      }
      if (best_target >= 0) {
        matches.push_back({i, best_end, &targets_[best_target]});
        i = best_end;
        continue;
      }
    }
    ++i;
  }
  return matches;
}

Lexicon ParseLexicon(std::string_view content, std::string name, LexiconDirection direction) {
  Lexicon lexicon(std::move(name), direction);
  std::istringstream in{std::string(content)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw ValidationError("lexicon '" + lexicon.name() + "' line " + std::to_string(line_no) +
                            ": expected exactly two tab-separated fields");
    try {
      lexicon.Add(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1));
    } catch (const ValidationError &e) {
      throw ValidationError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::string &path, std::string name, LexiconDirection direction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseLexicon(buf.str(), std::move(name), direction);
}

}  // namespace ugcbench

// src/hard_negatives.cc

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

#include "ugcbench/hard_negatives.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
    "eighteen", "nineteen"};
constexpr std::array<std::string_view, 8> kTens = {"twenty", "thirty", "forty", "fifty",
                                                   "sixty", "seventy", "eighty", "ninety"};
constexpr std::array<std::string_view, 4> kScales = {"hundred", "thousand", "million", "billion"};

// Number word -> (group, index in group).
std::optional<std::pair<std::span<const std::string_view>, size_t>> FindNumberWord(
    std::string_view lower) {
  for (std::span<const std::string_view> group :
       {std::span<const std::string_view>(kUnits), std::span<const std::string_view>(kTens),
        std::span<const std::string_view>(kScales)}) {
    for (size_t i = 0; i < group.size(); ++i)
      if (group[i] == lower) return std::make_pair(group, i);
  }
  return std::nullopt;
}

const Lexicon &Connectives() {
  static const Lexicon lex = [] {
    Lexicon l("connectives", LexiconDirection::kSwapBothWays);
    l.Add("because", "although");
    l.Add("so", "but");
    l.Add("since", "even though");
    l.Add("therefore", "nevertheless");
    return l;
  }();
  return lex;
}

std::u32string MatchCase(std::u32string replacement, char32_t original_first) {
  if (!replacement.empty() && IsUpper(original_first)) replacement[0] = ToUpper(replacement[0]);
  return replacement;
}

struct Span {
  size_t begin;
  size_t end;
  const std::vector<std::string> *pool;
};

}  // namespace

void Gazetteer::Add(std::string_view category, std::string_view entry) {
  if (entry.empty() || category.empty()) throw ValidationError("empty gazetteer field");
  std::string cat(category);
  try {
    matcher_.Add(entry, cat);
  } catch (const ValidationError &) {
    throw ValidationError("duplicate gazetteer entry '" + std::string(entry) + "'");
  }
  categories_[cat].emplace_back(entry);
  all_.emplace_back(entry);
}

Gazetteer ParseGazetteer(std::string_view content) {
  Gazetteer g;
  std::istringstream in{std::string(content)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ValidationError("gazetteer line " + std::to_string(line_no) +
                            ": expected category<TAB>entry");
    g.Add(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1));
  }
  return g;
}

Gazetteer LoadGazetteer(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gazetteer " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseGazetteer(buf.str());
}

std::optional<std::string> PerturbNumbers(std::string_view sentence, RandomStream &rng) {
  std::u32string text = DecodeUtf8(sentence);
  std::u32string out;
  bool changed = false;
  size_t i = 0;
  while (i < text.size()) {
    if (IsAsciiDigit(text[i])) {
      size_t j = i;
      while (j < text.size() && IsAsciiDigit(text[j])) ++j;
      const std::u32string original = text.substr(i, j - i);
      const bool no_leading_zero = original.size() > 1 && original[0] != '0';
      std::u32string repl;
      do {
        repl.clear();
        for (size_t k = 0; k < original.size(); ++k) {
          uint32_t digit = (k == 0 && no_leading_zero) ? 1 + rng.Below(9) : rng.Below(10);
          repl.push_back(U'0' + digit);
        }
      } while (repl == original);
      out += repl;
      changed = true;
      i = j;
      continue;
    }
    if (IsAsciiAlpha(text[i]) && (i == 0 || !IsWordAt(text, i - 1))) {
      size_t j = i;
      while (j < text.size() && IsWordAt(text, j)) ++j;
      std::string lower = EncodeUtf8(ToLower(std::u32string_view(text).substr(i, j - i)));
      if (auto hit = FindNumberWord(lower)) {
        auto [group, idx] = *hit;
        size_t pick = rng.Below(static_cast<uint32_t>(group.size() - 1));
        if (pick >= idx) ++pick;
        out += MatchCase(DecodeUtf8(group[pick]), text[i]);
        changed = true;
      } else {
        out.append(text, i, j - i);
      }
      i = j;
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  if (!changed) return std::nullopt;
  return EncodeUtf8(out);
}

std::optional<std::string> PerturbCausality(std::string_view sentence, RandomStream &rng) {
  std::u32string text = DecodeUtf8(sentence);
  auto matches = Connectives().FindMatches(text);
  if (matches.empty()) return std::nullopt;
  const auto &m = matches[rng.Below(static_cast<uint32_t>(matches.size()))];
  std::u32string out = text.substr(0, m.begin);
  out += MatchCase(*m.replacement, text[m.begin]);
  out.append(text, m.end, std::u32string::npos);
  return EncodeUtf8(out);
}

std::optional<std::string> PerturbEntities(std::string_view sentence, const Gazetteer &gazetteer,
                                           RandomStream &rng) {
  if (gazetteer.empty()) throw ValidationError("entity replacement needs a non-empty gazetteer");
  std::u32string text = DecodeUtf8(sentence);

  std::vector<Span> spans;
  std::vector<bool> covered(text.size(), false);
  for (const auto &m : gazetteer.matcher().FindMatches(text)) {
    const auto &pool = gazetteer.categories().at(EncodeUtf8(*m.replacement));
    spans.push_back({m.begin, m.end, &pool});
    std::fill(covered.begin() + m.begin, covered.begin() + m.end, true);
  }

  // Runs of capitalized tokens, skipping the first word and the pronoun "I".
  bool first_word = true;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsWordAt(text, i) || (i > 0 && IsWordAt(text, i - 1))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsWordAt(text, j)) ++j;
    const bool is_first = first_word;
    first_word = false;
    const bool capital = IsUpper(text[i]) && !(j - i == 1 && text[i] == 'I');
    if (!is_first && capital && !covered[i]) {
      size_t end = j;
      // Extend over following capitalized words separated by single spaces.
      while (end + 1 < text.size() && text[end] == ' ' && IsUpper(text[end + 1]) &&
             !covered[end + 1]) {
        size_t k = end + 1;
        while (k < text.size() && IsWordAt(text, k)) ++k;
        end = k;
      }
      spans.push_back({i, end, &gazetteer.all()});
      j = end;
    }
    i = j;
  }
  std::sort(spans.begin(), spans.end(), [](const Span &a, const Span &b) { return a.begin < b.begin; });

  struct Usable {
    const Span *span;
    std::vector<const std::string *> choices;
  };
  std::vector<Usable> usable;
  for (const Span &s : spans) {
    const std::u32string original = ToLower(std::u32string_view(text).substr(s.begin, s.end - s.begin));
    Usable u{&s, {}};
    for (const std::string &entry : *s.pool)
      if (ToLower(DecodeUtf8(entry)) != original) u.choices.push_back(&entry);
    if (!u.choices.empty()) usable.push_back(std::move(u));
  }
  if (usable.empty()) return std::nullopt;

  const Usable &pick = usable[rng.Below(static_cast<uint32_t>(usable.size()))];
  const std::string &entry = *pick.choices[rng.Below(static_cast<uint32_t>(pick.choices.size()))];
  std::u32string out = text.substr(0, pick.span->begin);
  out += DecodeUtf8(entry);
  out.append(text, pick.span->end, std::u32string::npos);
  return EncodeUtf8(out);
}

size_t HardNegativeSet::total_negatives() const {
  size_t n = 0;
  for (const auto &v : negatives) n += v.size();
  return n;
}

std::vector<std::string> HardNegativeSet::Flatten() const {
  std::vector<std::string> out(originals);
  for (const auto &v : negatives) out.insert(out.end(), v.begin(), v.end());
  return out;
}

HardNegativeSet BuildHardNegatives(std::span<const std::string> targets, int per_perturber,
                                   const Gazetteer &gazetteer, uint64_t seed) {
  if (per_perturber < 1) throw ValidationError("per_perturber must be >= 1");
  HardNegativeSet set;
  set.originals.assign(targets.begin(), targets.end());
  set.negatives.resize(targets.size());
  for (size_t t = 0; t < targets.size(); ++t) {
    RandomStream rng = RandomStream::Derive(seed, t);
    std::set<std::string> seen{targets[t]};
    auto keep = [&](std::optional<std::string> s) {
      if (s && seen.insert(*s).second) set.negatives[t].push_back(std::move(*s));
    };
    for (int a = 0; a < per_perturber; ++a) keep(PerturbCausality(targets[t], rng));
    for (int a = 0; a < per_perturber; ++a) keep(PerturbNumbers(targets[t], rng));
    for (int a = 0; a < per_perturber; ++a) keep(PerturbEntities(targets[t], gazetteer, rng));
  }
  if (!targets.empty())
    set.factor = static_cast<double>(targets.size() + set.total_negatives()) /
                 static_cast<double>(targets.size());
  return set;
}

}  // namespace ugcbench

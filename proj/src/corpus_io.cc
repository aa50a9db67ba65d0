// src/corpus_io.cc

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

#include "ugcbench/corpus_io.h"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <regex>

#include "json.hpp"

#include "ugcbench/error.h"
#include "ugcbench/unicode.h"

namespace ugcbench {
namespace {

bool IsAsciiPunct(char32_t c) {
  return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) || (c >= 91 && c <= 96) ||
         (c >= 123 && c <= 126);
}

bool IsTerminal(char32_t c) { return c == '.' || c == '!' || c == '?'; }
bool IsCloser(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x201D || c == 0x2019;
}
bool IsOpener(char32_t c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == 0x201C || c == 0x2018;
}

constexpr std::array<std::u32string_view, 17> kAbbreviations = {
    U"mr.", U"mrs.", U"ms.", U"dr.", U"prof.", U"sr.", U"jr.", U"st.", U"vs.",
    U"etc.", U"e.g.", U"i.e.", U"inc.", U"ltd.", U"co.", U"mt.", U"no."};

std::string Trim(std::u32string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && IsWhitespace(s[b])) ++b;
  while (e > b && IsWhitespace(s[e - 1])) --e;
  return EncodeUtf8(s.substr(b, e - b));
}

void PutF32(float f, std::string *out) {
  auto u = std::bit_cast<uint32_t>(f);
  for (int b = 0; b < 4; ++b) out->push_back(static_cast<char>((u >> (8 * b)) & 0xFF));
}

float GetF32(const unsigned char *p) {
  uint32_t u = 0;
  for (int b = 0; b < 4; ++b) u |= static_cast<uint32_t>(p[b]) << (8 * b);
  return std::bit_cast<float>(u);
}

}  // namespace

const std::vector<std::pair<char32_t, std::string_view>> &PunctuationTable() {
  static const std::vector<std::pair<char32_t, std::string_view>> table = {
      {0x201C, "\""}, {0x201D, "\""}, {0x201E, "\""}, {0x00AB, "\""}, {0x00BB, "\""},
      {0x2018, "'"},  {0x2019, "'"},  {0x201A, "'"},
      {0x2013, "-"},  {0x2014, "-"},  {0x2212, "-"},
      {0x2026, "..."},
  };
  return table;
}

std::string Preprocess(std::string_view sentence, const PreprocessConfig &config) {
  std::u32string text = DecodeUtf8(sentence);

  if (config.remove_nonprintable) {
    std::u32string kept;
    kept.reserve(text.size());
    for (char32_t c : text) {
      if (c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
        kept.push_back(' ');
      } else if (!IsNonPrintable(c)) {
        kept.push_back(c);
      }
    }
    text.swap(kept);
  }

  if (config.normalize_punctuation) {
    std::u32string mapped;
    mapped.reserve(text.size());
    for (char32_t c : text) {
      bool hit = false;
      for (const auto &[from, to] : PunctuationTable()) {
        if (c == from) {
          for (char ch : to) mapped.push_back(static_cast<char32_t>(ch));
          hit = true;
          break;
        }
      }
      if (!hit) mapped.push_back(c);
    }
    std::u32string collapsed;
    collapsed.reserve(mapped.size());
    bool pending = false;
    for (char32_t c : mapped) {
      if (IsWhitespace(c)) {
        pending = !collapsed.empty();
        continue;
      }
      if (pending) collapsed.push_back(' ');
      pending = false;
      collapsed.push_back(c);
    }
    text.swap(collapsed);
  }

  if (config.lowercase)
    for (char32_t &c : text) c = ToLower(c);
  return EncodeUtf8(text);
}

double CommonCharFraction(std::string_view sentence) {
  std::u32string text = DecodeUtf8Lenient(sentence);
  if (text.empty()) return 0.0;
  size_t common = 0;
  for (char32_t c : text)
    if (IsAsciiAlpha(c) || IsAsciiDigit(c) || c == ' ' || IsAsciiPunct(c)) ++common;
  return static_cast<double>(common) / static_cast<double>(text.size());
}

bool KeepEnglish(std::string_view sentence, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw ValidationError("filter threshold must be in [0,1]");
  if (sentence.empty()) return false;
  return CommonCharFraction(sentence) >= threshold;
}

std::string ReplaceHtmlLineBreaks(std::string_view text) {
  static const std::regex br("<br\\s*/?>", std::regex::icase);
  return std::regex_replace(std::string(text), br, "\n");
}

std::vector<std::string> SplitSentences(std::string_view text_bytes) {
  const std::u32string text = DecodeUtf8Lenient(text_bytes);
  std::vector<std::string> out;
  auto emit = [&](size_t b, size_t e) {
    std::string s = Trim(std::u32string_view(text).substr(b, e - b));
    if (!s.empty()) out.push_back(std::move(s));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\n') {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!IsTerminal(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsTerminal(text[j])) ++j;
    while (j < text.size() && IsCloser(text[j])) ++j;
    if (j >= text.size() || !IsWhitespace(text[j]) || text[j] == '\n') {
      i = j;
      continue;
    }
    size_t k = j;
    while (k < text.size() && IsWhitespace(text[k]) && text[k] != '\n') ++k;
    if (k >= text.size() || text[k] == '\n') {
      i = k;
      continue;
    }
    const char32_t next = text[k];
    bool boundary = IsUpper(next) || IsOpener(next) || IsAsciiDigit(next);
    if (boundary && j == i + 1 && text[i] == '.') {
      size_t w = i;
      while (w > start && !IsWhitespace(text[w - 1])) --w;
      std::u32string word = ToLower(std::u32string_view(text).substr(w, i + 1 - w));
      for (auto abbr : kAbbreviations)
        if (word == abbr) boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = k;
    }
    i = k;
  }
  emit(start, text.size());
  return out;
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void WriteLines(const std::string &path, const std::vector<std::string> &lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  for (const auto &l : lines) out << l << '\n';
  if (!out) throw IoError("write failed for " + path);
}

std::string SidecarPath(const std::string &path) { return path + ".meta.json"; }

void WriteEmbeddings(const EmbeddingMatrix &m, const std::string &path) {
  if (m.empty()) throw ValidationError("cannot write an empty embedding matrix");
  std::string bytes;
  bytes.reserve(m.data().size() * 4);
  for (size_t i = 0; i < m.data().size(); ++i) {
    const double v = m.data()[i];
    if (!std::isfinite(v) || std::abs(v) > std::numeric_limits<float>::max())
      throw ValidationError("value at row " + std::to_string(i / m.cols()) +
                            " is not representable as a finite float32");
    PutF32(static_cast<float>(v), &bytes);
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + path);
  }
  nlohmann::ordered_json meta;
  meta["n"] = m.rows();
  meta["d"] = m.cols();
  meta["dtype"] = "f32le";
  std::ofstream side(SidecarPath(path), std::ios::binary | std::ios::trunc);
  if (!side) throw IoError("cannot write " + SidecarPath(path));
  side << meta.dump() << '\n';
}

EmbeddingMatrix ReadEmbeddings(const std::string &path) {
  std::ifstream side(SidecarPath(path), std::ios::binary);
  if (!side) throw IoError("missing sidecar " + SidecarPath(path));
  nlohmann::json meta;
  try {
    side >> meta;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError("malformed sidecar " + SidecarPath(path) + ": " + e.what());
  }
  if (!meta.contains("n") || !meta.contains("d") || !meta["n"].is_number_unsigned() ||
      !meta["d"].is_number_unsigned())
    throw ValidationError("sidecar " + SidecarPath(path) + " must hold unsigned n and d");
  if (meta.value("dtype", std::string("f32le")) != "f32le")
    throw ValidationError("unsupported dtype in " + SidecarPath(path));
  const auto n = meta["n"].get<size_t>();
  const auto d = meta["d"].get<size_t>();
  if (n == 0 || d == 0) throw ValidationError("sidecar declares an empty matrix");

  std::error_code ec;
  const auto actual = std::filesystem::file_size(path, ec);
  if (ec) throw IoError("cannot stat " + path);
  const uint64_t expected = static_cast<uint64_t>(n) * d * 4;
  if (actual != expected)
    throw IoError("size mismatch for " + path + ": expected " + std::to_string(expected) +
                  " bytes, found " + std::to_string(actual));

  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<unsigned char> bytes(expected);
  in.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(expected));
  if (!in) throw IoError("short read on " + path);

  std::vector<double> data(n * d);
  for (size_t i = 0; i < n * d; ++i) {
    float f = GetF32(bytes.data() + 4 * i);
    if (!std::isfinite(f))
      throw ValidationError("non-finite value in " + path + " at row " + std::to_string(i / d));
    data[i] = f;
  }
  return EmbeddingMatrix(n, d, std::move(data));
}

}  // namespace ugcbench

// include/ugcbench/unicode.h

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

#ifndef UGCBENCH_UNICODE_H_
#define UGCBENCH_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace ugcbench {

// Strict decoding throws ValidationError naming the byte offset of the first
// malformed sequence.
std::u32string DecodeUtf8(std::string_view bytes);
// Lenient decoding maps each malformed byte to U+FFFD.
std::u32string DecodeUtf8Lenient(std::string_view bytes);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string *out);

bool IsWhitespace(char32_t c);
// ASCII punctuation/symbols plus the common Unicode punctuation blocks.
bool IsPunctuation(char32_t c);
// Cc and Cf characters (ASCII controls, C1 controls, zero-width and
// bidi formatting marks, BOM).
bool IsNonPrintable(char32_t c);
bool IsAsciiAlpha(char32_t c);
bool IsAsciiDigit(char32_t c);
bool IsWordChar(char32_t c);
bool IsUpper(char32_t c);

// Simple one-to-one case mapping over Latin, Greek and Cyrillic.
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);
std::u32string ToLower(std::u32string_view text);
std::string LowercaseUtf8(std::string_view text);

// Whitespace split, then every punctuation character becomes a token of its
// own (BERT basic pre-tokenizer rules, minus accent stripping).
std::vector<std::string> Pretokenize(std::string_view text, bool lowercase);

}  // namespace ugcbench

#endif  // UGCBENCH_UNICODE_H_

// Copyright (c) 2026 The romantok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROMANTOK_UTF8_H_
#define ROMANTOK_UTF8_H_

#include <string>
#include <string_view>

namespace romantok {

// Throws Error on malformed UTF-8.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t cp);

std::string NormalizeNfc(std::string_view text);
std::string ToLower(std::string_view text);

enum class Script { kHan, kHangul, kKana, kLatin, kSpace, kOther };

// Latin covers letters, digits and the apostrophe. Kana includes the
// prolonged sound mark. Hangul covers precomposed syllables and jamo.
Script ClassifyCodePoint(char32_t cp);

inline bool IsHangulSyllable(char32_t cp) {
  return cp >= 0xAC00 && cp <= 0xD7A3;
}

}  // namespace romantok

#endif  // ROMANTOK_UTF8_H_

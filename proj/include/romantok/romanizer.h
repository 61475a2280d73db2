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

#ifndef ROMANTOK_ROMANIZER_H_
#define ROMANTOK_ROMANIZER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romantok/language.h"
#include "romantok/lexicon.h"

namespace romantok {

struct RomanToken {
  std::string text;
  LanguageTag language = LanguageTag::kZh;
  // Source grapheme(s); empty when the token was parsed rather than produced.
  std::optional<std::string> origin;

  bool operator==(const RomanToken&) const = default;
};

// Lexicons consulted by language-dispatching calls. Either may be null when
// the corresponding language never occurs.
struct LexiconSet {
  const Lexicon* zh = nullptr;
  const Lexicon* ja = nullptr;
};

// Whitespace in the input separates units and produces no token; any other
// code point outside the language's script is rejected with its offset.

// One token per Han code point, default reading.
std::vector<RomanToken> RomanizeZh(std::string_view text,
                                   const Lexicon& lexicon);

// One token per precomposed Hangul syllable.
std::vector<RomanToken> RomanizeKo(std::string_view text);
std::string RomanizeKoSyllable(char32_t syllable);

// Inverse of RomanizeKo. Throws Error naming the first unparsable token.
std::string DeromanizeKo(std::span<const RomanToken> tokens);
char32_t DeromanizeKoSyllable(std::string_view roman);

// Kanji by longest lexicon match, kana by the built-in Hepburn table.
std::vector<RomanToken> RomanizeJa(std::string_view text,
                                   const Lexicon& lexicon);

// Dispatch on language; EN raises UnsupportedLanguageError.
std::vector<RomanToken> Romanize(std::string_view text, LanguageTag language,
                                 const LexiconSet& lexicons);

// Romanizes every CJK run of a mixed-script sentence and passes Latin words
// through lowercased; the result is space-joined, e.g.
// "差不多 ten minutes" -> "cha4 bu4 duo1 ten minutes".
std::string RomanizeMixed(std::string_view text, const LexiconSet& lexicons,
                          bool han_as_japanese = false);

// Joins token texts with single spaces.
std::string JoinRomanTokens(std::span<const RomanToken> tokens);

// Table accessors, exposed for tests and vocabulary builders.
// Index order follows the Unicode syllable composition order.
const std::vector<std::string>& KoreanInitials();
const std::vector<std::string>& KoreanMedials();
const std::vector<std::string>& KoreanFinals();

// The kana table as a JA lexicon (weight 1 per entry). Merged with a kanji
// lexicon it gives a complete reverse mapping for Japanese.
const Lexicon& KanaLexicon();

}  // namespace romantok

#endif  // ROMANTOK_ROMANIZER_H_

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

#include "romantok/romanizer.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <utility>

#include "romanizer_internal.h"
#include "romantok/concat_tokenizer.h"
#include "romantok/error.h"
#include "romantok/utf8.h"
#include "tables.h"
#include "text_util.h"

namespace romantok {

namespace {

constexpr char32_t kSyllableBase = 0xAC00;
constexpr int kMedialCount = 21;
constexpr int kFinalCount = 28;
constexpr int kMedialFinal = kMedialCount * kFinalCount;  // 588

constexpr char32_t kSmallTsuHira = 0x3063;
constexpr char32_t kSmallTsuKata = 0x30C3;
constexpr char32_t kProlongedMark = 0x30FC;

struct JamoTables {
  std::vector<std::string> initials, medials, finals;
  // (roman, index), longest roman first, for backtracking parses.
  std::vector<std::pair<std::string, int>> initial_order, medial_order;
  std::map<std::string, int, std::less<>> final_index;
};

std::vector<std::pair<std::string, int>> LongestFirst(
    const std::vector<std::string>& romans) {
  std::vector<std::pair<std::string, int>> out;
  for (int i = 0; i < static_cast<int>(romans.size()); ++i) {
    out.emplace_back(romans[i], i);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.size() > b.first.size();
  });
  return out;
}

const JamoTables& Jamo() {
  static const JamoTables tables = [] {
    JamoTables t;
    std::size_t line_no = 0;
    for (std::string_view line : internal::Split(internal::JamoTableTsv(), '\n')) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      const auto f = internal::Split(line, '\t');
      if (f.size() != 4) throw ParseError("hangul_jamo.tsv", line_no, "bad row");
      std::string roman = f[3] == "-" ? std::string() : std::string(f[3]);
      const std::size_t index = std::stoul(std::string(f[1]));
      auto* slot = f[0] == "initial" ? &t.initials
                   : f[0] == "medial" ? &t.medials
                   : f[0] == "final"  ? &t.finals
                                      : nullptr;
      if (slot == nullptr || index != slot->size()) {
        throw ParseError("hangul_jamo.tsv", line_no, "bad slot or index");
      }
      slot->push_back(std::move(roman));
    }
    if (t.initials.size() != 19 || t.medials.size() != kMedialCount ||
        t.finals.size() != kFinalCount) {
      throw ParseError("hangul_jamo.tsv", 0, "expected 19/21/28 jamo");
    }
    t.initial_order = LongestFirst(t.initials);
    t.medial_order = LongestFirst(t.medials);
    for (int i = 0; i < kFinalCount; ++i) t.final_index.emplace(t.finals[i], i);
    return t;
  }();
  return tables;
}

struct KanaTable {
  std::map<std::u32string, std::string> romans;
  std::size_t max_length = 0;
};

const KanaTable& Kana() {
  static const KanaTable table = [] {
    KanaTable t;
    std::size_t line_no = 0;
    for (std::string_view line : internal::Split(internal::KanaTableTsv(), '\n')) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      const auto f = internal::Split(line, '\t');
      if (f.size() != 2 || !IsValidRoman(f[1])) {
        throw ParseError("kana.tsv", line_no, "bad row");
      }
      std::u32string kana = DecodeUtf8(f[0]);
      t.max_length = std::max(t.max_length, kana.size());
      t.romans.emplace(std::move(kana), std::string(f[1]));
    }
    return t;
  }();
  return table;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'i' || c == 'u' || c == 'e' || c == 'o';
}

// Longest kana-table match at `pos`; returns the match length (0 if none).
std::size_t MatchKana(std::u32string_view text, std::size_t pos,
                      std::string* roman) {
  const KanaTable& table = Kana();
  const std::size_t limit = std::min(table.max_length, text.size() - pos);
  for (std::size_t len = limit; len > 0; --len) {
    auto it = table.romans.find(std::u32string(text.substr(pos, len)));
    if (it != table.romans.end()) {
      *roman = it->second;
      return len;
    }
  }
  return 0;
}

// Doubles the leading consonant of a kana roman after a small tsu.
// "ka" -> "kka", "chi" -> "tchi". Empty when gemination does not apply.
std::string Geminate(const std::string& roman) {
  if (roman.empty() || IsVowel(roman[0]) || roman[0] == 'n' ||
      roman[0] == 'x') {
    return {};
  }
  if (roman.rfind("ch", 0) == 0) return "t" + roman;
  return roman.substr(0, 1) + roman;
}

bool IsSpace(char32_t cp) { return ClassifyCodePoint(cp) == Script::kSpace; }

// Length of the non-space run starting at `pos`.
std::size_t RunLength(std::u32string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() && !IsSpace(text[end])) ++end;
  return end - pos;
}

void Unmapped(std::u32string_view text, std::size_t pos, std::size_t len,
              bool lenient, std::vector<internal::RomanUnit>* out) {
  std::string grapheme = EncodeUtf8(text.substr(pos, len));
  if (!lenient) throw UnknownGraphemeError(grapheme, pos);
  out->push_back({grapheme, grapheme, false, pos});
}

void RomanizeZhUnits(std::u32string_view text, const Lexicon& lexicon,
                     bool lenient, std::vector<internal::RomanUnit>* out) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (IsSpace(text[i])) continue;
    const std::string ch = EncodeUtf8(text[i]);
    const LexiconEntry* entry =
        ClassifyCodePoint(text[i]) == Script::kHan ? lexicon.Find(ch) : nullptr;
    if (entry == nullptr) {
      Unmapped(text, i, 1, lenient, out);
      continue;
    }
    out->push_back({entry->Default().roman, ch, true, i});
  }
}

void RomanizeKoUnits(std::u32string_view text, bool lenient,
                     std::vector<internal::RomanUnit>* out) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (IsSpace(text[i])) continue;
    if (!IsHangulSyllable(text[i])) {
      Unmapped(text, i, 1, lenient, out);
      continue;
    }
    out->push_back({RomanizeKoSyllable(text[i]), EncodeUtf8(text[i]), true, i});
  }
}

void RomanizeJaUnits(std::u32string_view text, const Lexicon& lexicon,
                     bool lenient, std::vector<internal::RomanUnit>* out) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    const std::size_t run = RunLength(text, i);

    // Lexicon entries before kana; longest match.
    const std::size_t limit = std::min(lexicon.max_surface_length(), run);
    bool matched = false;
    for (std::size_t len = limit; len > 0 && !matched; --len) {
      const std::string surface = EncodeUtf8(text.substr(i, len));
      if (const LexiconEntry* entry = lexicon.Find(surface)) {
        out->push_back({entry->Default().roman, surface, true, i});
        i += len;
        matched = true;
      }
    }
    if (matched) continue;

    const char32_t cp = text[i];
    if (cp == kSmallTsuHira || cp == kSmallTsuKata) {
      std::string next;
      const std::size_t len =
          run > 1 ? MatchKana(text.substr(0, i + run), i + 1, &next) : 0;
      const std::string doubled = len > 0 ? Geminate(next) : std::string();
      if (!doubled.empty()) {
        out->push_back(
            {doubled, EncodeUtf8(text.substr(i, len + 1)), true, i});
        i += len + 1;
        continue;
      }
    }
    if (cp == kProlongedMark || cp == 0xFF70) {
      if (!out->empty() && out->back().mapped &&
          IsVowel(out->back().text.back())) {
        out->push_back({std::string(1, out->back().text.back()),
                        EncodeUtf8(cp), true, i});
        ++i;
        continue;
      }
      Unmapped(text, i, 1, lenient, out);
      ++i;
      continue;
    }
    std::string roman;
    const std::size_t len = MatchKana(text.substr(0, i + run), i, &roman);
    if (len > 0) {
      out->push_back({roman, EncodeUtf8(text.substr(i, len)), true, i});
      i += len;
      continue;
    }
    Unmapped(text, i, 1, lenient, out);
    ++i;
  }
}

const Lexicon& RequireLexicon(const Lexicon* lexicon, LanguageTag language) {
  if (lexicon == nullptr) {
    throw InvalidArgumentError("no " + std::string(ToString(language)) +
                               " lexicon supplied");
  }
  if (lexicon->language() != language) {
    throw InvalidArgumentError("lexicon language is " +
                               std::string(ToString(lexicon->language())) +
                               ", expected " + std::string(ToString(language)));
  }
  return *lexicon;
}

std::vector<RomanToken> ToTokens(std::vector<internal::RomanUnit> units,
                                 LanguageTag language) {
  std::vector<RomanToken> out;
  out.reserve(units.size());
  for (auto& u : units) {
    out.push_back({std::move(u.text), language, std::move(u.origin)});
  }
  return out;
}

}  // namespace

namespace internal {

std::vector<RomanUnit> RomanizeUnits(std::u32string_view text,
                                     LanguageTag language,
                                     const LexiconSet& lexicons, bool lenient) {
  std::vector<RomanUnit> out;
  switch (language) {
    case LanguageTag::kZh:
      RomanizeZhUnits(text, RequireLexicon(lexicons.zh, language), lenient,
                      &out);
      break;
    case LanguageTag::kKo:
      RomanizeKoUnits(text, lenient, &out);
      break;
    case LanguageTag::kJa:
      RomanizeJaUnits(text, RequireLexicon(lexicons.ja, language), lenient,
                      &out);
      break;
    case LanguageTag::kEn:
      throw UnsupportedLanguageError(
          "English is not romanized; it is BPE-encoded directly");
  }
  return out;
}

}  // namespace internal

std::vector<RomanToken> RomanizeZh(std::string_view text,
                                   const Lexicon& lexicon) {
  LexiconSet set;
  set.zh = &lexicon;
  return ToTokens(
      internal::RomanizeUnits(DecodeUtf8(text), LanguageTag::kZh, set, false),
      LanguageTag::kZh);
}

std::vector<RomanToken> RomanizeKo(std::string_view text) {
  return ToTokens(
      internal::RomanizeUnits(DecodeUtf8(text), LanguageTag::kKo, {}, false),
      LanguageTag::kKo);
}

std::string RomanizeKoSyllable(char32_t syllable) {
  if (!IsHangulSyllable(syllable)) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(syllable));
    throw InvalidArgumentError(std::string("not a precomposed Hangul syllable: ") +
                               buf);
  }
  const JamoTables& t = Jamo();
  const int index = static_cast<int>(syllable - kSyllableBase);
  const int initial = index / kMedialFinal;
  const int medial = (index % kMedialFinal) / kFinalCount;
  const int final = index % kFinalCount;
  return t.initials[initial] + t.medials[medial] + t.finals[final];
}

char32_t DeromanizeKoSyllable(std::string_view roman) {
  const JamoTables& t = Jamo();
  // Longest initial first, longest medial next; the final must consume the
  // remainder exactly, otherwise back off to a shorter choice.
  for (const auto& [ini, ini_index] : t.initial_order) {
    if (roman.substr(0, ini.size()) != ini) continue;
    const std::string_view rest = roman.substr(ini.size());
    for (const auto& [med, med_index] : t.medial_order) {
      if (rest.substr(0, med.size()) != med) continue;
      auto fin = t.final_index.find(rest.substr(med.size()));
      if (fin == t.final_index.end()) continue;
      return kSyllableBase +
             static_cast<char32_t>((ini_index * kMedialCount + med_index) *
                                       kFinalCount +
                                   fin->second);
    }
  }
  throw Error("cannot parse '" + std::string(roman) + "' as a Hangul syllable");
}

std::string DeromanizeKo(std::span<const RomanToken> tokens) {
  std::u32string out;
  out.reserve(tokens.size());
  for (const RomanToken& token : tokens) {
    out.push_back(DeromanizeKoSyllable(token.text));
  }
  return EncodeUtf8(out);
}

std::vector<RomanToken> RomanizeJa(std::string_view text,
                                   const Lexicon& lexicon) {
  LexiconSet set;
  set.ja = &lexicon;
  return ToTokens(
      internal::RomanizeUnits(DecodeUtf8(text), LanguageTag::kJa, set, false),
      LanguageTag::kJa);
}

std::vector<RomanToken> Romanize(std::string_view text, LanguageTag language,
                                 const LexiconSet& lexicons) {
  return ToTokens(
      internal::RomanizeUnits(DecodeUtf8(text), language, lexicons, false),
      language);
}

std::string RomanizeMixed(std::string_view text, const LexiconSet& lexicons,
                          bool han_as_japanese) {
  std::vector<std::string> words;
  for (const ScriptSpan& span : SegmentScript(text, han_as_japanese)) {
    if (span.language == LanguageTag::kEn) {
      words.push_back(ToLower(span.text));
      continue;
    }
    try {
      for (const RomanToken& t : Romanize(span.text, span.language, lexicons)) {
        words.push_back(t.text);
      }
    } catch (const UnknownGraphemeError& e) {
      throw UnknownGraphemeError(e.grapheme(), span.offset + e.offset());
    }
  }
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string JoinRomanTokens(std::span<const RomanToken> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

const std::vector<std::string>& KoreanInitials() { return Jamo().initials; }
const std::vector<std::string>& KoreanMedials() { return Jamo().medials; }
const std::vector<std::string>& KoreanFinals() { return Jamo().finals; }

const Lexicon& KanaLexicon() {
  static const Lexicon lexicon = [] {
    Lexicon lex(LanguageTag::kJa);
    for (const auto& [kana, roman] : Kana().romans) {
      const std::string surface = EncodeUtf8(kana);
      lex.Add(surface, roman, 1.0);
      const std::string doubled = Geminate(roman);
      if (doubled.empty()) continue;
      // Gemination follows the script of the kana it precedes.
      const bool katakana = kana[0] >= 0x30A0 && kana[0] <= 0x30FF;
      const char32_t tsu = katakana ? kSmallTsuKata : kSmallTsuHira;
      lex.Add(EncodeUtf8(tsu) + surface, doubled, 1.0);
    }
    return lex;
  }();
  return lexicon;
}

}  // namespace romantok

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

#ifndef ROMANTOK_LEXICON_H_
#define ROMANTOK_LEXICON_H_

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "romantok/language.h"

namespace romantok {

// True when `roman` matches [a-z]+[0-9]? (the digit is a Mandarin tone).
bool IsValidRoman(std::string_view roman);

struct Reading {
  std::string roman;
  double weight = 1.0;

  bool operator==(const Reading&) const = default;
};

struct LexiconEntry {
  std::string surface;
  // Highest weight first; the first reading is the default.
  std::vector<Reading> readings;

  const Reading& Default() const { return readings.front(); }
  bool operator==(const LexiconEntry&) const = default;
};

// Grapheme -> weighted romanizations for Mandarin or Japanese.
// Korean is romanized algorithmically and has no lexicon.
class Lexicon {
 public:
  // Throws InvalidArgumentError unless language is ZH or JA.
  explicit Lexicon(LanguageTag language);

  LanguageTag language() const { return language_; }

  // Adds a reading, summing the weight into an existing (surface, roman)
  // pair. Throws InvalidArgumentError on an invalid roman, a negative
  // weight, or a multi-character Mandarin surface.
  void Add(std::string_view surface, std::string_view roman, double weight);

  const LexiconEntry* Find(std::string_view surface) const;
  const std::map<std::string, LexiconEntry, std::less<>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

  std::size_t CharVocabSize() const { return entries_.size(); }
  std::size_t RomanVocabSize() const;
  std::size_t ReadingCount() const;
  // Number of surfaces with more than one reading.
  std::size_t PolyphoneCount() const;
  // Longest surface in code points; drives longest-match lookup.
  std::size_t max_surface_length() const { return max_surface_length_; }

  bool operator==(const Lexicon&) const = default;

 private:
  LanguageTag language_;
  std::map<std::string, LexiconEntry, std::less<>> entries_;
  std::size_t max_surface_length_ = 0;
};

// TSV: surface<TAB>roman[<TAB>weight]; '#' lines and blank lines skipped.
// Throws ParseError (with line number) on malformed input or when no entry
// is present.
Lexicon ParseLexicon(std::istream& in, LanguageTag language,
                     const std::string& source = "<stream>");
Lexicon LoadLexicon(const std::string& path, LanguageTag language);

// Union of two same-language lexicons; weights of shared readings add.
Lexicon MergeLexicons(const Lexicon& a, const Lexicon& b);

struct Candidate {
  std::string surface;
  double weight = 0.0;

  bool operator==(const Candidate&) const = default;
};

// roman -> surfaces that read that way, by descending weight and then
// code-point order of the surface.
class ReverseLexicon {
 public:
  explicit ReverseLexicon(LanguageTag language) : language_(language) {}

  LanguageTag language() const { return language_; }
  // nullptr when the roman string has no candidate.
  const std::vector<Candidate>* Find(std::string_view roman) const;
  const std::map<std::string, std::vector<Candidate>, std::less<>>&
  candidates() const {
    return candidates_;
  }
  std::size_t size() const { return candidates_.size(); }

 private:
  friend ReverseLexicon Reverse(const Lexicon& lexicon);

  LanguageTag language_;
  std::map<std::string, std::vector<Candidate>, std::less<>> candidates_;
};

ReverseLexicon Reverse(const Lexicon& lexicon);

}  // namespace romantok

#endif  // ROMANTOK_LEXICON_H_

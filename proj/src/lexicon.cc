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

#include "romantok/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "romantok/error.h"
#include "romantok/utf8.h"
#include "text_util.h"

namespace romantok {

bool IsValidRoman(std::string_view roman) {
  std::size_t letters = 0;
  while (letters < roman.size() && roman[letters] >= 'a' &&
         roman[letters] <= 'z') {
    ++letters;
  }
  if (letters == 0) return false;
  if (letters == roman.size()) return true;
  return letters + 1 == roman.size() && roman.back() >= '0' &&
         roman.back() <= '9';
}

Lexicon::Lexicon(LanguageTag language) : language_(language) {
  if (language != LanguageTag::kZh && language != LanguageTag::kJa) {
    throw InvalidArgumentError("lexicons exist only for zh and ja, not " +
                               std::string(ToString(language)));
  }
}

void Lexicon::Add(std::string_view surface, std::string_view roman,
                  double weight) {
  if (surface.empty()) throw InvalidArgumentError("empty surface");
  if (!IsValidRoman(roman)) {
    throw InvalidArgumentError("invalid roman '" + std::string(roman) + "'");
  }
  if (!(weight >= 0.0)) {
    throw InvalidArgumentError("negative weight for '" + std::string(surface) +
                               "'");
  }
  const std::size_t length = DecodeUtf8(surface).size();
  if (language_ == LanguageTag::kZh && length != 1) {
    throw InvalidArgumentError("Mandarin surface must be one character: '" +
                               std::string(surface) + "'");
  }
  auto it = entries_.find(surface);
  if (it == entries_.end()) {
    it = entries_.emplace(std::string(surface),
                          LexiconEntry{std::string(surface), {}})
             .first;
  }
  auto& readings = it->second.readings;
  auto r = std::find_if(readings.begin(), readings.end(),
                        [&](const Reading& x) { return x.roman == roman; });
  if (r == readings.end()) {
    readings.push_back({std::string(roman), weight});
  } else {
    r->weight += weight;
  }
  // Stable: equal weights keep first-seen order.
  std::stable_sort(readings.begin(), readings.end(),
                   [](const Reading& a, const Reading& b) {
                     return a.weight > b.weight;
                   });
  max_surface_length_ = std::max(max_surface_length_, length);
}

const LexiconEntry* Lexicon::Find(std::string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::RomanVocabSize() const {
  std::set<std::string_view> romans;
  for (const auto& [surface, entry] : entries_) {
    for (const auto& r : entry.readings) romans.insert(r.roman);
  }
  return romans.size();
}

std::size_t Lexicon::ReadingCount() const {
  std::size_t n = 0;
  for (const auto& [surface, entry] : entries_) n += entry.readings.size();
  return n;
}

std::size_t Lexicon::PolyphoneCount() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const auto& kv) {
    return kv.second.readings.size() > 1;
  });
}

Lexicon ParseLexicon(std::istream& in, LanguageTag language,
                     const std::string& source) {
  Lexicon lexicon(language);
  std::map<std::string, std::size_t, std::less<>> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = internal::Split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(source, line_no,
                       "expected 2 or 3 tab-separated columns, got " +
                           std::to_string(fields.size()));
    }
    const std::string_view surface = fields[0];
    const std::string_view roman = fields[1];
    if (surface.empty()) throw ParseError(source, line_no, "empty surface");
    if (roman.empty()) throw ParseError(source, line_no, "empty reading");
    if (!IsValidRoman(roman)) {
      throw ParseError(source, line_no,
                       "invalid roman '" + std::string(roman) + "'");
    }
    double weight = 1.0;
    if (fields.size() == 3) {
      const std::string_view w = fields[2];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ParseError(source, line_no,
                         "invalid weight '" + std::string(w) + "'");
      }
      if (weight < 0.0) throw ParseError(source, line_no, "negative weight");
    }
    try {
      DecodeUtf8(surface);
      lexicon.Add(surface, roman, weight);
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
    first_line.try_emplace(std::string(surface), line_no);
  }
  if (lexicon.empty()) throw ParseError(source, 0, "lexicon has no entries");
  for (const auto& [surface, entry] : lexicon.entries()) {
    double sum = 0.0;
    for (const auto& r : entry.readings) sum += r.weight;
    if (!(sum > 0.0)) {
      throw ParseError(source, first_line.at(surface),
                       "readings of '" + surface + "' have zero total weight");
    }
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::string& path, LanguageTag language) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon '" + path + "'");
  return ParseLexicon(in, language, path);
}

Lexicon MergeLexicons(const Lexicon& a, const Lexicon& b) {
  if (a.language() != b.language()) {
    throw InvalidArgumentError("cannot merge lexicons of different languages");
  }
  Lexicon out = a;
  for (const auto& [surface, entry] : b.entries()) {
    for (const auto& r : entry.readings) out.Add(surface, r.roman, r.weight);
  }
  return out;
}

const std::vector<Candidate>* ReverseLexicon::Find(
    std::string_view roman) const {
  auto it = candidates_.find(roman);
  return it == candidates_.end() ? nullptr : &it->second;
}

ReverseLexicon Reverse(const Lexicon& lexicon) {
  ReverseLexicon rev(lexicon.language());
  for (const auto& [surface, entry] : lexicon.entries()) {
    for (const auto& r : entry.readings) {
      rev.candidates_[r.roman].push_back({surface, r.weight});
    }
  }
  // UTF-8 byte order equals code-point order.
  for (auto& [roman, list] : rev.candidates_) {
    std::sort(list.begin(), list.end(),
              [](const Candidate& x, const Candidate& y) {
                if (x.weight != y.weight) return x.weight > y.weight;
                return x.surface < y.surface;
              });
  }
  return rev;
}

}  // namespace romantok

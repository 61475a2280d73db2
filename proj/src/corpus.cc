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

#include "romantok/corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "romanizer_internal.h"
#include "romantok/error.h"
#include "romantok/utf8.h"

namespace romantok {

std::string_view ToString(UtteranceClass cls) {
  switch (cls) {
    case UtteranceClass::kZh:
      return "ZH";
    case UtteranceClass::kEn:
      return "EN";
    case UtteranceClass::kCs:
      return "CS";
  }
  return "?";
}

UtteranceClass Classify(std::string_view transcript) {
  bool han = false;
  bool latin = false;
  for (char32_t c : DecodeUtf8(transcript)) {
    const Script s = ClassifyCodePoint(c);
    if (s == Script::kHan) han = true;
    if (s == Script::kLatin && ((c | 0x20) >= 'a' && (c | 0x20) <= 'z')) {
      latin = true;
    } else if (s == Script::kLatin && c >= 0xC0 && c != 0x2019) {
      latin = true;
    }
  }
  if (han && latin) return UtteranceClass::kCs;
  if (han) return UtteranceClass::kZh;
  if (latin) return UtteranceClass::kEn;
  throw InvalidArgumentError("transcript has neither Han nor Latin text: '" +
                             std::string(transcript) + "'");
}

void Manifest::Add(std::string id, double duration, std::string text) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgumentError("utterance '" + id +
                               "' has non-positive duration");
  }
  const UtteranceClass cls = Classify(text);
  Add(UtteranceRecord{std::move(id), duration, std::move(text), cls});
}

void Manifest::Add(UtteranceRecord record) {
  if (!(record.duration > 0.0)) {
    throw InvalidArgumentError("utterance '" + record.id +
                               "' has non-positive duration");
  }
  total_ += record.duration;
  records_.push_back(std::move(record));
}

double Manifest::MaxDuration() const {
  double m = 0.0;
  for (const auto& r : records_) m = std::max(m, r.duration);
  return m;
}

Manifest ParseManifest(std::istream& in, const std::string& source) {
  Manifest manifest;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("duration") ||
        !obj.contains("text") || !obj["id"].is_string() ||
        !obj["duration"].is_number() || !obj["text"].is_string()) {
      throw ParseError(source, line_no,
                       "expected {\"id\": str, \"duration\": num, \"text\": str}");
    }
    try {
      manifest.Add(obj["id"].get<std::string>(), obj["duration"].get<double>(),
                   NormalizeNfc(obj["text"].get<std::string>()));
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return manifest;
}

Manifest LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest '" + path + "'");
  return ParseManifest(in, path);
}

void WriteManifest(std::ostream& out, const Manifest& manifest) {
  for (const auto& r : manifest.records()) {
    nlohmann::ordered_json obj;
    obj["id"] = r.id;
    obj["duration"] = r.duration;
    obj["text"] = r.text;
    out << obj.dump() << '\n';
  }
}

CompositionStats ComputeComposition(const Manifest& manifest) {
  if (manifest.empty()) {
    throw InvalidArgumentError("composition of an empty manifest");
  }
  double zh = 0.0, en = 0.0, cs = 0.0;
  for (const auto& r : manifest.records()) {
    switch (r.cls) {
      case UtteranceClass::kZh:
        zh += r.duration;
        break;
      case UtteranceClass::kEn:
        en += r.duration;
        break;
      case UtteranceClass::kCs:
        cs += r.duration;
        break;
    }
  }
  const double total = zh + en + cs;
  return {total, 100.0 * zh / total, 100.0 * en / total, 100.0 * cs / total};
}

std::string FormatCompositionTable(std::span<const std::string> names,
                                   std::span<const CompositionStats> stats) {
  if (names.size() != stats.size()) {
    throw InvalidArgumentError("one name per column required");
  }
  std::ostringstream out;
  char buf[64];
  auto row = [&](const char* label, auto value) {
    std::snprintf(buf, sizeof(buf), "%-12s", label);
    out << buf;
    for (const auto& s : stats) {
      std::snprintf(buf, sizeof(buf), " %10.1f", value(s));
      out << buf;
    }
    out << '\n';
  };
  std::snprintf(buf, sizeof(buf), "%-12s", "");
  out << buf;
  for (const auto& n : names) {
    std::snprintf(buf, sizeof(buf), " %10s", n.c_str());
    out << buf;
  }
  out << '\n';
  row("duration(h)", [](const CompositionStats& s) { return s.total_seconds / 3600.0; });
  row("ZH (%)", [](const CompositionStats& s) { return s.zh_percent; });
  row("EN (%)", [](const CompositionStats& s) { return s.en_percent; });
  row("CS (%)", [](const CompositionStats& s) { return s.cs_percent; });
  return out.str();
}

namespace {

// Uniform draw in [0, bound) by rejection; mt19937_64 output is fixed by the
// standard, so results are identical across standard libraries.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> ShuffledOrder(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[Draw(rng, i)]);
  }
  return order;
}

// Durations are summed in seconds; targets within this relative slack count
// as reached so integer multiples are not perturbed by rounding.
constexpr double kSlack = 1e-9;

}  // namespace

std::vector<Manifest> Balance(std::span<const BalanceRequest> requests,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Manifest> out;
  for (const BalanceRequest& req : requests) {
    if (req.manifest == nullptr || req.manifest->empty()) {
      throw InvalidArgumentError("cannot balance an empty manifest");
    }
    if (!(req.target_hours > 0.0)) {
      throw InvalidArgumentError("target hours must be positive");
    }
    const Manifest& src = *req.manifest;
    const double target = req.target_hours * 3600.0;
    const double total = src.total_duration();
    const double tolerance = kSlack * target;
    Manifest result;
    double achieved = 0.0;

    const auto copies =
        static_cast<std::size_t>(std::floor(target / total + kSlack));
    for (std::size_t c = 0; c < copies; ++c) {
      for (const auto& r : src.records()) {
        result.Add(r);
        achieved += r.duration;
      }
    }
    if (achieved < target - tolerance) {
      for (std::size_t idx : ShuffledOrder(src.size(), rng)) {
        const auto& r = src.records()[idx];
        result.Add(r);
        achieved += r.duration;
        if (achieved >= target - tolerance) break;
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

double VocabStats::reduction_percent() const {
  return VocabReductionPercent(chars, romans);
}

double VocabReductionPercent(std::size_t chars, std::size_t romans) {
  if (chars == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(romans) / static_cast<double>(chars));
}

VocabStats ComputeVocabStats(std::span<const std::string> lines,
                             const Lexicon& lexicon) {
  LexiconSet set;
  if (lexicon.language() == LanguageTag::kZh) set.zh = &lexicon;
  if (lexicon.language() == LanguageTag::kJa) set.ja = &lexicon;
  std::set<char32_t> chars, unknown;
  std::set<std::string> romans;
  for (const std::string& line : lines) {
    const std::u32string cps = DecodeUtf8(line);
    // Only the lexicon language's script is counted.
    std::u32string script;
    for (char32_t c : cps) {
      const Script s = ClassifyCodePoint(c);
      const bool keep = s == Script::kHan ||
                        (lexicon.language() == LanguageTag::kJa && s == Script::kKana);
      script.push_back(keep ? c : U' ');
    }
    for (const auto& unit : internal::RomanizeUnits(script, lexicon.language(),
                                                    set, /*lenient=*/true)) {
      for (char32_t c : DecodeUtf8(unit.origin)) {
        (unit.mapped ? chars : unknown).insert(c);
      }
      if (unit.mapped) romans.insert(unit.text);
    }
  }
  return {chars.size(), romans.size(), unknown.size()};
}

}  // namespace romantok

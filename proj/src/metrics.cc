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

#include "romantok/metrics.h"

#include <cstdio>
#include <limits>
#include <tuple>

#include "romantok/error.h"
#include "romantok/utf8.h"
#include "text_util.h"

namespace romantok {

double AlignmentResult::rate() const {
  if (ref_len == 0) {
    return errors() == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(errors()) / static_cast<double>(ref_len);
}

AlignmentResult& AlignmentResult::operator+=(const AlignmentResult& other) {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  hits += other.hits;
  ref_len += other.ref_len;
  return *this;
}

AlignmentResult EditAlign(std::span<const std::string> ref,
                          std::span<const std::string> hyp) {
  // (errors, substitutions, insertions) compared lexicographically.
  using Cost = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<Cost> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {j, 0, j};
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {i, 0, 0};
    for (std::size_t j = 1; j <= m; ++j) {
      const auto& [de, ds, di] = prev[j - 1];
      Cost best = ref[i - 1] == hyp[j - 1] ? Cost{de, ds, di}
                                           : Cost{de + 1, ds + 1, di};
      const auto& [xe, xs, xi] = prev[j];
      best = std::min(best, Cost{xe + 1, xs, xi});  // deletion
      const auto& [ye, ys, yi] = cur[j - 1];
      best = std::min(best, Cost{ye + 1, ys, yi + 1});  // insertion
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const auto& [errors, subs, ins] = prev[m];
  AlignmentResult r;
  r.substitutions = subs;
  r.insertions = ins;
  r.deletions = errors - subs - ins;
  r.ref_len = n;
  r.hits = n - r.substitutions - r.deletions;
  return r;
}

namespace {

bool IsCjk(Script s) {
  return s == Script::kHan || s == Script::kHangul || s == Script::kKana;
}

char32_t MaybeLower(char32_t c, const Normalization& norm) {
  if (!norm.lowercase) return c;
  const std::string lower = ToLower(EncodeUtf8(c));
  return DecodeUtf8(lower).front();
}

bool IsApostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

void TrimApostrophes(std::u32string* word) {
  while (!word->empty() && IsApostrophe(word->front())) word->erase(0, 1);
  while (!word->empty() && IsApostrophe(word->back())) word->pop_back();
}

}  // namespace

std::vector<std::string> MixedTokenize(std::string_view text,
                                       const Normalization& norm) {
  std::vector<std::string> out;
  std::u32string word;
  auto flush = [&]() {
    if (norm.strip_punctuation) TrimApostrophes(&word);
    if (!word.empty()) out.push_back(EncodeUtf8(word));
    word.clear();
  };
  for (char32_t c : DecodeUtf8(text)) {
    const Script s = ClassifyCodePoint(c);
    if (s == Script::kLatin) {
      word.push_back(MaybeLower(c, norm));
      continue;
    }
    flush();
    if (IsCjk(s)) {
      out.push_back(EncodeUtf8(c));
    } else if (s == Script::kOther && !norm.strip_punctuation) {
      out.push_back(EncodeUtf8(c));
    }
  }
  flush();
  return out;
}

std::vector<std::string> CharTokenize(std::string_view text,
                                      const Normalization& norm) {
  std::vector<std::string> out;
  for (char32_t c : DecodeUtf8(text)) {
    const Script s = ClassifyCodePoint(c);
    if (s == Script::kSpace) continue;
    if (s == Script::kOther && norm.strip_punctuation) continue;
    out.push_back(EncodeUtf8(MaybeLower(c, norm)));
  }
  return out;
}

std::vector<std::string> WordTokenize(std::string_view text,
                                      const Normalization& norm) {
  std::vector<std::string> out;
  for (const std::string& raw : internal::SplitWhitespace(text)) {
    std::u32string word;
    for (char32_t c : DecodeUtf8(raw)) {
      if (ClassifyCodePoint(c) == Script::kOther && norm.strip_punctuation) {
        continue;
      }
      word.push_back(MaybeLower(c, norm));
    }
    if (norm.strip_punctuation) TrimApostrophes(&word);
    if (!word.empty()) out.push_back(EncodeUtf8(word));
  }
  return out;
}

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kCer:
      return "cer";
    case Metric::kWer:
      return "wer";
    case Metric::kMer:
      return "mer";
  }
  return "?";
}

Metric ParseMetric(std::string_view name) {
  if (name == "cer") return Metric::kCer;
  if (name == "wer") return Metric::kWer;
  if (name == "mer") return Metric::kMer;
  throw InvalidArgumentError("unknown metric '" + std::string(name) + "'");
}

AlignmentResult Cer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm) {
  return EditAlign(CharTokenize(ref, norm), CharTokenize(hyp, norm));
}

AlignmentResult Wer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm) {
  return EditAlign(WordTokenize(ref, norm), WordTokenize(hyp, norm));
}

AlignmentResult Mer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm) {
  return EditAlign(MixedTokenize(ref, norm), MixedTokenize(hyp, norm));
}

AlignmentResult Score(Metric metric, std::string_view ref,
                      std::string_view hyp, const Normalization& norm) {
  switch (metric) {
    case Metric::kCer:
      return Cer(ref, hyp, norm);
    case Metric::kWer:
      return Wer(ref, hyp, norm);
    case Metric::kMer:
      return Mer(ref, hyp, norm);
  }
  return {};
}

AlignmentResult ScoreCorpus(Metric metric, std::span<const std::string> refs,
                            std::span<const std::string> hyps,
                            const Normalization& norm) {
  if (refs.size() != hyps.size()) {
    throw InvalidArgumentError("reference and hypothesis counts differ: " +
                               std::to_string(refs.size()) + " vs " +
                               std::to_string(hyps.size()));
  }
  AlignmentResult total;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    total += Score(metric, refs[i], hyps[i], norm);
  }
  return total;
}

std::string FormatRate(const AlignmentResult& result) {
  if (result.infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * result.rate());
  return buf;
}

}  // namespace romantok

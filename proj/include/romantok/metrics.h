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

#ifndef ROMANTOK_METRICS_H_
#define ROMANTOK_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace romantok {

struct AlignmentResult {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t hits = 0;
  std::size_t ref_len = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  // Errors against an empty reference have no finite rate.
  bool infinite() const { return ref_len == 0 && errors() > 0; }
  // (S + D + I) / ref_len; +inf when infinite(), 0 for two empty sides.
  double rate() const;

  AlignmentResult& operator+=(const AlignmentResult& other);
  bool operator==(const AlignmentResult&) const = default;
};

// Unit-cost Levenshtein alignment. Among minimum-cost alignments the one
// with fewest substitutions, then fewest insertions, is reported.
AlignmentResult EditAlign(std::span<const std::string> ref,
                          std::span<const std::string> hyp);

struct Normalization {
  bool lowercase = true;
  bool strip_punctuation = true;
};

// CJK code points become single tokens, Latin/digit runs become words.
// Whitespace separates. Punctuation is dropped or, with stripping off,
// kept as single-character tokens.
std::vector<std::string> MixedTokenize(std::string_view text,
                                       const Normalization& norm = {});
// Code points, whitespace excluded.
std::vector<std::string> CharTokenize(std::string_view text,
                                      const Normalization& norm = {});
// Whitespace-delimited words.
std::vector<std::string> WordTokenize(std::string_view text,
                                      const Normalization& norm = {});

enum class Metric { kCer, kWer, kMer };

std::string_view ToString(Metric metric);
Metric ParseMetric(std::string_view name);

AlignmentResult Cer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm = {});
AlignmentResult Wer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm = {});
AlignmentResult Mer(std::string_view ref, std::string_view hyp,
                    const Normalization& norm = {});
AlignmentResult Score(Metric metric, std::string_view ref,
                      std::string_view hyp, const Normalization& norm = {});

// Corpus-level score: counts are summed across utterance pairs.
AlignmentResult ScoreCorpus(Metric metric, std::span<const std::string> refs,
                            std::span<const std::string> hyps,
                            const Normalization& norm = {});

// "40.00", or "inf".
std::string FormatRate(const AlignmentResult& result);

}  // namespace romantok

#endif  // ROMANTOK_METRICS_H_

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

#ifndef ROMANTOK_CORPUS_H_
#define ROMANTOK_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romantok/lexicon.h"

namespace romantok {

enum class UtteranceClass { kZh, kEn, kCs };

std::string_view ToString(UtteranceClass cls);

// ZH: Han without Latin letters; EN: Latin letters only; CS: both.
// Throws InvalidArgumentError when neither script occurs.
UtteranceClass Classify(std::string_view transcript);

struct UtteranceRecord {
  std::string id;
  double duration = 0.0;  // seconds
  std::string text;
  UtteranceClass cls = UtteranceClass::kEn;

  bool operator==(const UtteranceRecord&) const = default;
};

class Manifest {
 public:
  // Throws InvalidArgumentError for a non-positive duration or a transcript
  // Classify rejects.
  void Add(std::string id, double duration, std::string text);
  void Add(UtteranceRecord record);

  const std::vector<UtteranceRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  double total_duration() const { return total_; }
  double MaxDuration() const;

 private:
  std::vector<UtteranceRecord> records_;
  double total_ = 0.0;
};

// JSON lines with keys "id", "duration" (seconds) and "text".
Manifest ParseManifest(std::istream& in, const std::string& source = "<stream>");
Manifest LoadManifest(const std::string& path);
void WriteManifest(std::ostream& out, const Manifest& manifest);

struct CompositionStats {
  double total_seconds = 0.0;
  // Percentages of total duration; they sum to 100 before rounding.
  double zh_percent = 0.0;
  double en_percent = 0.0;
  double cs_percent = 0.0;
};

// Throws InvalidArgumentError for an empty manifest.
CompositionStats ComputeComposition(const Manifest& manifest);

// duration(h) / ZH (%) / EN (%) / CS (%) rows, one column per manifest.
std::string FormatCompositionTable(std::span<const std::string> names,
                                   std::span<const CompositionStats> stats);

struct BalanceRequest {
  const Manifest* manifest = nullptr;
  double target_hours = 0.0;
};

// Resamples each manifest to its target duration with one seeded stream.
// Upsampling: floor(target / total) whole copies, then utterances from a
// shuffled order until the target is reached. Downsampling: shuffled
// prefix until the target is reached. Either way the result overshoots by
// less than one utterance. Throws InvalidArgumentError for target <= 0 or
// an empty manifest.
std::vector<Manifest> Balance(std::span<const BalanceRequest> requests,
                              std::uint64_t seed);

struct VocabStats {
  std::size_t chars = 0;    // distinct script characters covered
  std::size_t romans = 0;   // distinct romans those characters produce
  std::size_t unknown = 0;  // distinct script characters not covered
  double reduction_percent() const;
};

// Percentage reduction 100 * (1 - romans / chars).
double VocabReductionPercent(std::size_t chars, std::size_t romans);

// Counts over the lexicon language's script in `lines`, romanized as the
// romanizer would (default reading, longest match for Japanese).
VocabStats ComputeVocabStats(std::span<const std::string> lines,
                             const Lexicon& lexicon);

}  // namespace romantok

#endif  // ROMANTOK_CORPUS_H_

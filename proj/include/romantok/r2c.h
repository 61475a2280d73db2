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

#ifndef ROMANTOK_R2C_H_
#define ROMANTOK_R2C_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "romantok/concat_tokenizer.h"
#include "romantok/language.h"
#include "romantok/lexicon.h"
#include "romantok/ngram.h"

namespace romantok {

struct LatticeArc {
  std::string surface;
  // Candidate weight normalized over its roman key; 1 for pass-through.
  double emission = 1.0;
  // The roman token had no candidate; `surface` holds the raw token.
  bool unmapped = false;
};

// One position per roman token, one arc per candidate character.
struct Lattice {
  LanguageTag language = LanguageTag::kZh;
  std::vector<std::vector<LatticeArc>> positions;

  std::size_t size() const { return positions.size(); }
  // Product of arc counts, saturating at SIZE_MAX.
  std::size_t PathCount() const;
};

Lattice BuildLattice(std::span<const std::string> romans,
                     const ReverseLexicon& reverse);

struct DecodedPath {
  std::vector<int> arcs;  // arc index per position
  double score = 0.0;
  std::string text;
};

// Best path under
//   sum_t [ alpha * log(emission_t) + sum_{c in arc_t} log P(c | context) ]
//   + log P(</s> | context).
// An unmapped arc contributes emission only and restarts the context.
// Ties go to the lexicographically smallest arc-index sequence.
DecodedPath ViterbiBest(const Lattice& lattice, const CharNGramModel& model,
                        double alpha = 1.0);
std::string ViterbiDecode(const Lattice& lattice, const CharNGramModel& model,
                          double alpha = 1.0);

// Roman-to-character decoder over a concatenated-tokenizer sequence.
class R2CDecoder {
 public:
  explicit R2CDecoder(double alpha = 1.0) : alpha_(alpha) {}

  void AddLanguage(LanguageTag language, ReverseLexicon reverse,
                   CharNGramModel model);
  bool Has(LanguageTag language) const { return models_.contains(language); }
  double alpha() const { return alpha_; }

  // Splits `seq` into maximal same-language runs. ZH/JA runs go through
  // lattice + Viterbi, KO runs through DeromanizeKo, EN runs are re-joined
  // from BPE pieces. Runs are joined with single spaces. Tokens that are
  // not roman strings (char-vocab partitions, unknowns) pass through.
  // Throws Error if a ZH/JA run has no registered model.
  std::string Decode(const TokenSequence& seq) const;

  // Decodes a single-language run of roman tokens.
  std::string DecodeRun(LanguageTag language,
                        std::span<const std::string> texts) const;

 private:
  struct Resources {
    ReverseLexicon reverse;
    CharNGramModel model;
  };
  double alpha_;
  std::map<LanguageTag, Resources> models_;
};

}  // namespace romantok

#endif  // ROMANTOK_R2C_H_

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

#include "romantok/r2c.h"

#include <cmath>
#include <limits>
#include <map>

#include "romantok/bpe.h"
#include "romantok/error.h"
#include "romantok/romanizer.h"
#include "romantok/utf8.h"

namespace romantok {

std::size_t Lattice::PathCount() const {
  std::size_t count = 1;
  for (const auto& arcs : positions) {
    if (arcs.empty()) return 0;
    if (count > std::numeric_limits<std::size_t>::max() / arcs.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= arcs.size();
  }
  return count;
}

Lattice BuildLattice(std::span<const std::string> romans,
                     const ReverseLexicon& reverse) {
  Lattice lattice;
  lattice.language = reverse.language();
  lattice.positions.reserve(romans.size());
  for (const std::string& roman : romans) {
    std::vector<LatticeArc> arcs;
    const std::vector<Candidate>* candidates = reverse.Find(roman);
    if (candidates == nullptr || candidates->empty()) {
      arcs.push_back({roman, 1.0, true});
    } else {
      double total = 0.0;
      for (const Candidate& c : *candidates) total += c.weight;
      for (const Candidate& c : *candidates) {
        // Zero-weight readings stay reachable through a tiny emission.
        const double w = total > 0.0 ? c.weight / total : 0.0;
        arcs.push_back({c.surface, w > 0.0 ? w : 1e-12, false});
      }
    }
    lattice.positions.push_back(std::move(arcs));
  }
  return lattice;
}

namespace {

struct Node {
  int prev = -1;  // index into the previous layer
  int arc = -1;
  double score = 0.0;
  std::u32string state;
};

using Layers = std::vector<std::vector<Node>>;

std::vector<int> PathOf(const Layers& layers, std::size_t layer, int index) {
  std::vector<int> arcs(layer);
  for (std::size_t t = layer; t > 0; --t) {
    const Node& n = layers[t][index];
    arcs[t - 1] = n.arc;
    index = n.prev;
  }
  return arcs;
}

}  // namespace

DecodedPath ViterbiBest(const Lattice& lattice, const CharNGramModel& model,
                        double alpha) {
  const std::size_t keep = static_cast<std::size_t>(model.order() - 1);
  Layers layers(1);
  layers[0].push_back({-1, -1, 0.0, model.StartContext()});

  for (std::size_t t = 0; t < lattice.size(); ++t) {
    const auto& arcs = lattice.positions[t];
    if (arcs.empty()) throw Error("lattice position without arcs");
    std::vector<Node>& prev = layers.back();
    std::vector<Node> next;
    std::map<std::u32string, int> by_state;
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
      for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        const LatticeArc& arc = arcs[a];
        double delta = alpha * std::log(arc.emission);
        std::u32string state;
        if (arc.unmapped) {
          state = model.StartContext();
        } else {
          std::u32string history = prev[i].state;
          for (char32_t c : DecodeUtf8(arc.surface)) {
            delta += model.LogProb(c, history);
            history.push_back(c);
          }
          state = history.substr(history.size() - keep);
        }
        const double score = prev[i].score + delta;
        auto found = by_state.find(state);
        if (found == by_state.end()) {
          by_state.emplace(state, static_cast<int>(next.size()));
          next.push_back({i, a, score, std::move(state)});
          continue;
        }
        // Rare exact tie: compare full arc sequences.
        const Node& incumbent = next[found->second];
        if (score < incumbent.score) continue;
        if (score == incumbent.score) {
          std::vector<int> path_a = PathOf(layers, t, i);
          path_a.push_back(a);
          std::vector<int> path_b = PathOf(layers, t, incumbent.prev);
          path_b.push_back(incumbent.arc);
          if (!(path_a < path_b)) continue;
        }
        next[found->second] = {i, a, score, std::move(state)};
      }
    }
    layers.push_back(std::move(next));
  }

  const std::size_t last = layers.size() - 1;
  int best = -1;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(layers[last].size()); ++i) {
    const Node& n = layers[last][i];
    const double total = n.score + model.LogProb(CharNGramModel::kEos, n.state);
    if (best < 0 || total > best_score ||
        (total == best_score &&
         PathOf(layers, last, i) < PathOf(layers, last, best))) {
      best = i;
      best_score = total;
    }
  }

  DecodedPath out;
  out.score = best_score;
  out.arcs = PathOf(layers, last, best);
  for (std::size_t t = 0; t < out.arcs.size(); ++t) {
    out.text += lattice.positions[t][out.arcs[t]].surface;
  }
  return out;
}

std::string ViterbiDecode(const Lattice& lattice, const CharNGramModel& model,
                          double alpha) {
  if (lattice.size() == 0) return {};
  return ViterbiBest(lattice, model, alpha).text;
}

void R2CDecoder::AddLanguage(LanguageTag language, ReverseLexicon reverse,
                             CharNGramModel model) {
  if (language != LanguageTag::kZh && language != LanguageTag::kJa) {
    throw InvalidArgumentError("R2C models apply to zh and ja only");
  }
  if (reverse.language() != language) {
    throw InvalidArgumentError("reverse lexicon language mismatch");
  }
  models_.insert_or_assign(language,
                           Resources{std::move(reverse), std::move(model)});
}

std::string R2CDecoder::DecodeRun(LanguageTag language,
                                  std::span<const std::string> texts) const {
  switch (language) {
    case LanguageTag::kEn:
      return JoinBpePieces(texts);
    case LanguageTag::kKo: {
      std::string out;
      for (const std::string& t : texts) {
        if (!IsValidRoman(t)) {
          out += t;
          continue;
        }
        try {
          out += EncodeUtf8(DeromanizeKoSyllable(t));
        } catch (const Error&) {
          out += t;
        }
      }
      return out;
    }
    case LanguageTag::kZh:
    case LanguageTag::kJa: {
      auto it = models_.find(language);
      if (it == models_.end()) {
        throw Error("no R2C model registered for '" +
                    std::string(ToString(language)) + "'");
      }
      const Lattice lattice = BuildLattice(texts, it->second.reverse);
      return ViterbiDecode(lattice, it->second.model, alpha_);
    }
  }
  return {};
}

std::string R2CDecoder::Decode(const TokenSequence& seq) const {
  std::string out;
  std::size_t i = 0;
  while (i < seq.size()) {
    std::size_t j = i;
    while (j < seq.size() && seq.langs[j] == seq.langs[i]) ++j;
    const std::string run = DecodeRun(
        seq.langs[i], std::span<const std::string>(seq.texts).subspan(i, j - i));
    if (!run.empty()) {
      if (!out.empty()) out += ' ';
      out += run;
    }
    i = j;
  }
  return out;
}

}  // namespace romantok

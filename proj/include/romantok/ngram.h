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

#ifndef ROMANTOK_NGRAM_H_
#define ROMANTOK_NGRAM_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace romantok {

// Character n-gram model with linear interpolation across orders.
//
//   P(c | h) = (1 - floor) * sum_k lambda'_k * ML_k(c | h_{k-1})
//              + floor / (V + 2)
//
// where h_{k-1} is the last k-1 symbols of the history, lambda_k is
// proportional to 2^(k-1), lambda' renormalizes lambda over the orders whose
// context was observed, and V + 2 counts the observed characters plus the
// end-of-sentence symbol and one bucket for unseen characters.
class CharNGramModel {
 public:
  static constexpr char32_t kBos = 0x02;
  static constexpr char32_t kEos = 0x03;
  static constexpr double kDefaultFloor = 0.01;

  using Counts = std::map<std::u32string, std::map<char32_t, std::int64_t>>;

  CharNGramModel(int order, double floor, Counts counts);

  int order() const { return order_; }
  double floor() const { return floor_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  // Observed characters, excluding the boundary symbols.
  std::size_t vocab_size() const { return vocab_.size(); }
  const Counts& counts() const { return counts_; }

  // `history` is everything generated so far in this sentence, starting
  // with order()-1 kBos symbols; only its tail is consulted. `c` may be
  // kEos.
  double Prob(char32_t c, std::u32string_view history) const;
  double LogProb(char32_t c, std::u32string_view history) const;

  // Context a new sentence starts from.
  std::u32string StartContext() const;

  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static CharNGramModel Load(std::istream& in,
                             const std::string& source = "<stream>");
  static CharNGramModel LoadFile(const std::string& path);

 private:
  struct ContextStats {
    std::int64_t total = 0;
    std::unordered_map<char32_t, std::int64_t> next;
  };

  int order_;
  double floor_;
  std::vector<double> lambdas_;
  Counts counts_;
  std::map<char32_t, bool> vocab_;
  std::unordered_map<std::u32string, ContextStats> index_;
};

// Counts every order 1..n over BOS-padded, EOS-terminated lines.
// Whitespace inside a line is ignored. Throws InvalidArgumentError for an
// empty corpus or order outside [1, 5].
CharNGramModel TrainCharNGram(std::span<const std::string> lines, int order,
                              double floor = CharNGramModel::kDefaultFloor);

}  // namespace romantok

#endif  // ROMANTOK_NGRAM_H_

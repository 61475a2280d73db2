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

#ifndef ROMANTOK_BPE_H_
#define ROMANTOK_BPE_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace romantok {

// Byte-pair-encoding model over code points with an explicit end-of-word
// symbol. Id 0 is the unknown token and id 1 the end-of-word marker; then
// the training characters in code-point order, then one token per merge.
class BpeModel {
 public:
  static constexpr std::string_view kUnknown = "<unk>";
  static constexpr std::string_view kEndOfWord = "</w>";
  static constexpr int kUnknownId = 0;
  static constexpr int kEndOfWordId = 1;
  static constexpr std::size_t kSpecialCount = 2;

  using Merge = std::pair<std::string, std::string>;

  // Validates the invariants: specials in place, ids unique, every merge's
  // concatenation present. Throws Error.
  BpeModel(std::vector<std::string> tokens, std::vector<Merge> merges);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<Merge>& merges() const { return merges_; }
  const std::string& Token(int id) const;
  std::optional<int> Find(std::string_view token) const;

  // Lowercases, splits on whitespace and segments each word. Characters
  // outside the vocabulary become kUnknownId.
  std::vector<int> Encode(std::string_view text) const;
  std::vector<std::string> EncodeToPieces(std::string_view text) const;
  // Concatenates pieces, turning end-of-word markers into single spaces.
  // Throws Error on an out-of-range id.
  std::string Decode(std::span<const int> ids) const;

  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static BpeModel Load(std::istream& in, const std::string& source = "<stream>");
  static BpeModel LoadFile(const std::string& path);

 private:
  std::vector<std::string> SegmentWord(std::u32string_view word) const;

  std::vector<std::string> tokens_;
  std::vector<Merge> merges_;
  std::unordered_map<std::string, int> ids_;
  // "left\x1fright" -> merge rank.
  std::unordered_map<std::string, std::size_t> ranks_;
};

// Greedy highest-frequency pair merging until `target_vocab` tokens exist or
// no pair occurs twice. Ties go to the lexicographically smallest
// (left, right). Throws InvalidArgumentError if target_vocab is below the
// number of distinct characters plus the two specials.
BpeModel TrainBpe(std::span<const std::string> lines, std::size_t target_vocab);

// Joins BPE pieces back to words: "ten</w>" "min" "utes</w>" ->
// "ten minutes".
std::string JoinBpePieces(std::span<const std::string> pieces);

}  // namespace romantok

#endif  // ROMANTOK_BPE_H_

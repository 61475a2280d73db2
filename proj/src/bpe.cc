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

#include "romantok/bpe.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "romantok/error.h"
#include "romantok/utf8.h"
#include "text_util.h"

namespace romantok {

namespace {

constexpr char kPairSep = '\x1f';
constexpr std::string_view kMergesHeader = "#merges";
constexpr std::string_view kVocabHeader = "#vocab";

std::string PairKey(std::string_view left, std::string_view right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back(kPairSep);
  key.append(right);
  return key;
}

using Symbols = std::vector<std::string>;

// Replaces every non-overlapping (left, right) occurrence, left to right.
void ApplyMerge(const std::string& left, const std::string& right,
                Symbols* symbols) {
  Symbols& s = *symbols;
  if (s.size() < 2) return;
  Symbols merged;
  merged.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && s[i] == left && s[i + 1] == right) {
      merged.push_back(left + right);
      i += 2;
    } else {
      merged.push_back(std::move(s[i]));
      ++i;
    }
  }
  s = std::move(merged);
}

Symbols WordSymbols(std::u32string_view word) {
  Symbols out;
  out.reserve(word.size() + 1);
  for (char32_t cp : word) out.push_back(EncodeUtf8(cp));
  out.emplace_back(BpeModel::kEndOfWord);
  return out;
}

}  // namespace

BpeModel::BpeModel(std::vector<std::string> tokens, std::vector<Merge> merges)
    : tokens_(std::move(tokens)), merges_(std::move(merges)) {
  if (tokens_.size() < kSpecialCount || tokens_[kUnknownId] != kUnknown ||
      tokens_[kEndOfWordId] != kEndOfWord) {
    throw Error("BPE vocabulary must start with <unk> and </w>");
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], static_cast<int>(i)).second) {
      throw Error("duplicate BPE token '" + tokens_[i] + "'");
    }
  }
  for (std::size_t k = 0; k < merges_.size(); ++k) {
    const auto& [left, right] = merges_[k];
    if (!ids_.contains(left) || !ids_.contains(right) ||
        !ids_.contains(left + right)) {
      throw Error("BPE merge " + std::to_string(k) + " (" + left + ", " +
                  right + ") refers to tokens outside the vocabulary");
    }
    ranks_.emplace(PairKey(left, right), k);
  }
}

const std::string& BpeModel::Token(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
    throw Error("BPE id " + std::to_string(id) + " out of range [0, " +
                std::to_string(tokens_.size()) + ")");
  }
  return tokens_[id];
}

std::optional<int> BpeModel::Find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> BpeModel::SegmentWord(std::u32string_view word) const {
  Symbols symbols = WordSymbols(word);
  while (symbols.size() > 1) {
    std::size_t best_rank = ranks_.size();
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      auto it = ranks_.find(PairKey(symbols[i], symbols[i + 1]));
      if (it != ranks_.end() && it->second < best_rank) {
        best_rank = it->second;
        best_pos = i;
      }
    }
    if (best_rank == ranks_.size()) break;
    const std::string left = symbols[best_pos];
    const std::string right = symbols[best_pos + 1];
    ApplyMerge(left, right, &symbols);
  }
  return symbols;
}

std::vector<std::string> BpeModel::EncodeToPieces(std::string_view text) const {
  std::vector<std::string> pieces;
  for (const std::string& word : internal::SplitWhitespace(ToLower(text))) {
    for (auto& piece : SegmentWord(DecodeUtf8(word))) {
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

std::vector<int> BpeModel::Encode(std::string_view text) const {
  std::vector<int> ids;
  for (const std::string& piece : EncodeToPieces(text)) {
    auto it = ids_.find(piece);
    ids.push_back(it == ids_.end() ? kUnknownId : it->second);
  }
  return ids;
}

std::string BpeModel::Decode(std::span<const int> ids) const {
  std::vector<std::string> pieces;
  pieces.reserve(ids.size());
  for (int id : ids) pieces.push_back(Token(id));
  return JoinBpePieces(pieces);
}

std::string JoinBpePieces(std::span<const std::string> pieces) {
  std::string out;
  for (const std::string& piece : pieces) {
    std::string_view p = piece;
    const bool ends_word = p.size() >= BpeModel::kEndOfWord.size() &&
                           p.substr(p.size() - BpeModel::kEndOfWord.size()) ==
                               BpeModel::kEndOfWord;
    if (ends_word) p.remove_suffix(BpeModel::kEndOfWord.size());
    out.append(p);
    if (ends_word) out.push_back(' ');
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

void BpeModel::Save(std::ostream& out) const {
  out << kVocabHeader << '\t' << tokens_.size() << '\n';
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out << tokens_[i] << '\t' << i << '\n';
  }
  out << kMergesHeader << '\n';
  for (const auto& [left, right] : merges_) {
    out << left << '\t' << right << '\n';
  }
}

void BpeModel::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write BPE model '" + path + "'");
  Save(out);
  if (!out) throw Error("failed writing BPE model '" + path + "'");
}

BpeModel BpeModel::Load(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next()) throw ParseError(source, 0, "empty BPE model");
  const auto header = internal::Split(line, '\t');
  if (header.size() != 2 || header[0] != kVocabHeader) {
    throw ParseError(source, line_no, "expected '#vocab<TAB>size' header");
  }
  std::size_t size = 0;
  try {
    size = std::stoul(std::string(header[1]));
  } catch (const std::exception&) {
    throw ParseError(source, line_no, "invalid vocabulary size");
  }
  std::vector<std::string> tokens;
  tokens.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (!next()) throw ParseError(source, line_no, "truncated vocabulary");
    const auto f = internal::Split(line, '\t');
    if (f.size() != 2 || f[1] != std::to_string(i)) {
      throw ParseError(source, line_no,
                       "expected 'token<TAB>" + std::to_string(i) + "'");
    }
    tokens.emplace_back(f[0]);
  }
  if (!next() || line != kMergesHeader) {
    throw ParseError(source, line_no, "expected '#merges'");
  }
  std::vector<Merge> merges;
  while (next()) {
    if (line.empty()) continue;
    const auto f = internal::Split(line, '\t');
    if (f.size() != 2) throw ParseError(source, line_no, "malformed merge");
    merges.emplace_back(std::string(f[0]), std::string(f[1]));
  }
  try {
    return BpeModel(std::move(tokens), std::move(merges));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
}

BpeModel BpeModel::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open BPE model '" + path + "'");
  return Load(in, path);
}

BpeModel TrainBpe(std::span<const std::string> lines,
                  std::size_t target_vocab) {
  std::map<std::u32string, std::int64_t> word_counts;
  for (const std::string& line : lines) {
    for (const std::string& word : internal::SplitWhitespace(ToLower(line))) {
      ++word_counts[DecodeUtf8(word)];
    }
  }
  if (word_counts.empty()) throw InvalidArgumentError("BPE corpus is empty");

  std::set<char32_t> chars;
  for (const auto& [word, count] : word_counts) {
    chars.insert(word.begin(), word.end());
  }
  const std::size_t floor = chars.size() + BpeModel::kSpecialCount;
  if (target_vocab < floor) {
    throw InvalidArgumentError(
        "target vocabulary " + std::to_string(target_vocab) +
        " is below the character floor " + std::to_string(floor) + " (" +
        std::to_string(chars.size()) + " characters + " +
        std::to_string(BpeModel::kSpecialCount) + " specials)");
  }

  std::vector<std::string> tokens = {std::string(BpeModel::kUnknown),
                                     std::string(BpeModel::kEndOfWord)};
  std::set<std::string> known(tokens.begin(), tokens.end());
  for (char32_t cp : chars) {
    tokens.push_back(EncodeUtf8(cp));
    known.insert(tokens.back());
  }

  std::vector<std::pair<Symbols, std::int64_t>> words;
  words.reserve(word_counts.size());
  for (const auto& [word, count] : word_counts) {
    words.emplace_back(WordSymbols(word), count);
  }

  std::vector<BpeModel::Merge> merges;
  while (tokens.size() < target_vocab) {
    std::map<std::pair<std::string_view, std::string_view>, std::int64_t> pairs;
    for (const auto& [symbols, count] : words) {
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
        pairs[{symbols[i], symbols[i + 1]}] += count;
      }
    }
    // Ordered map: the first maximum is the lexicographically smallest pair.
    auto best = pairs.end();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (best == pairs.end() || it->second > best->second) best = it;
    }
    if (best == pairs.end() || best->second < 2) break;
    std::string left(best->first.first);
    std::string right(best->first.second);
    for (auto& [symbols, count] : words) ApplyMerge(left, right, &symbols);
    std::string joined = left + right;
    if (known.insert(joined).second) tokens.push_back(joined);
    merges.emplace_back(std::move(left), std::move(right));
  }
  return BpeModel(std::move(tokens), std::move(merges));
}

}  // namespace romantok

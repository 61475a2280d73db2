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

#ifndef ROMANTOK_CONCAT_TOKENIZER_H_
#define ROMANTOK_CONCAT_TOKENIZER_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "romantok/bpe.h"
#include "romantok/language.h"
#include "romantok/lexicon.h"
#include "romantok/romanizer.h"

namespace romantok {

enum class SubTokenizerKind { kBpe, kRomanVocab, kCharVocab };

std::string_view ToString(SubTokenizerKind kind);
SubTokenizerKind ParseSubTokenizerKind(std::string_view name);

inline constexpr std::string_view kUnknownToken = "<unk>";

// One language's vocabulary with dense local ids [0, size()).
class SubTokenizer {
 public:
  static SubTokenizer FromBpe(LanguageTag language, BpeModel model);
  // A "<unk>" entry is used as the unknown id; one is appended if missing.
  static SubTokenizer FromVocab(LanguageTag language, SubTokenizerKind kind,
                                std::vector<std::string> tokens);

  LanguageTag language() const { return language_; }
  SubTokenizerKind kind() const { return kind_; }
  std::size_t size() const { return tokens_.size(); }
  int unknown_id() const { return unknown_id_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& Token(int local_id) const { return tokens_.at(local_id); }
  std::optional<int> Find(std::string_view token) const;
  // Non-null for kBpe.
  const BpeModel* bpe() const { return bpe_.get(); }

 private:
  SubTokenizer() = default;

  LanguageTag language_ = LanguageTag::kEn;
  SubTokenizerKind kind_ = SubTokenizerKind::kCharVocab;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
  int unknown_id_ = 0;
  std::shared_ptr<const BpeModel> bpe_;
};

struct TokenSequence {
  std::vector<int> ids;
  std::vector<std::string> texts;
  std::vector<LanguageTag> langs;

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
  bool operator==(const TokenSequence&) const = default;
};

struct ScriptSpan {
  std::string text;
  LanguageTag language;
  std::size_t offset;  // code points

  bool operator==(const ScriptSpan&) const = default;
};

// Splits on whitespace and script changes: Han -> ZH (JA when
// han_as_japanese), Hangul -> KO, Kana -> JA, Latin letters, digits and
// apostrophes -> EN. Throws UnknownGraphemeError on anything else.
std::vector<ScriptSpan> SegmentScript(std::string_view text,
                                      bool han_as_japanese = false);

struct Partition {
  LanguageTag language;
  SubTokenizerKind kind;
  int offset;
  int size;

  bool Contains(int id) const { return id >= offset && id < offset + size; }
};

// Sub-tokenizers laid end to end: partition k covers
// [offset_k, offset_k + size_k) with offset_0 = 0.
class ConcatTokenizer {
 public:
  // Throws InvalidArgumentError on an empty list or a repeated language.
  explicit ConcatTokenizer(std::vector<SubTokenizer> parts);

  std::size_t size() const { return total_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const SubTokenizer& part(std::size_t k) const { return parts_.at(k); }
  const SubTokenizer* Find(LanguageTag language) const;
  const Partition* FindPartition(LanguageTag language) const;

  // Han is treated as Japanese when a JA partition exists and ZH does not.
  bool han_as_japanese() const { return han_as_japanese_; }

  // Throws Error for an id outside [0, size()).
  LanguageTag Lid(int id) const;

  TokenSequence Encode(std::string_view text, const LexiconSet& lexicons) const;
  TokenSequence Decode(std::span<const int> ids) const;

 private:
  void EncodeSpan(const ScriptSpan& span, const LexiconSet& lexicons,
                  TokenSequence* out) const;
  std::size_t PartitionIndex(int id) const;

  std::vector<SubTokenizer> parts_;
  std::vector<Partition> partitions_;
  std::size_t total_ = 0;
  bool han_as_japanese_ = false;
};

// Space-joined romanized form of a token sequence: CJK tokens one per word,
// BPE pieces glued back into words.
std::string JoinTokenTexts(const TokenSequence& seq);

// Vocabulary files hold one token per line; the line number is the local id.
std::vector<std::string> LoadVocabFile(const std::string& path);
void SaveVocabFile(const std::string& path, std::span<const std::string> tokens);

// "<unk>" followed by the sorted distinct romans (kRomanVocab) or surfaces
// (kCharVocab) of a lexicon.
std::vector<std::string> BuildLexiconVocab(const Lexicon& lexicon,
                                           SubTokenizerKind kind);
// "<unk>" followed by the romans of all 11,172 Hangul syllables, or of the
// syllables occurring in `lines` when given.
std::vector<std::string> BuildKoreanRomanVocab(
    std::span<const std::string> lines = {});

// A tokenizer manifest and the lexicons it references.
//
// Manifest lines: language<TAB>kind<TAB>vocab-path[<TAB>lexicon-path].
// For kind "bpe" the vocab path is a BPE model file. Relative paths resolve
// against the manifest's directory.
struct TokenizerBundle {
  std::unique_ptr<ConcatTokenizer> tokenizer;
  std::optional<Lexicon> zh_lexicon;
  std::optional<Lexicon> ja_lexicon;

  LexiconSet lexicons() const;
};

TokenizerBundle LoadTokenizerManifest(const std::string& path);

}  // namespace romantok

#endif  // ROMANTOK_CONCAT_TOKENIZER_H_

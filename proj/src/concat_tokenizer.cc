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

#include "romantok/concat_tokenizer.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "romanizer_internal.h"
#include "romantok/error.h"
#include "romantok/utf8.h"
#include "text_util.h"

namespace romantok {

std::string_view ToString(SubTokenizerKind kind) {
  switch (kind) {
    case SubTokenizerKind::kBpe:
      return "bpe";
    case SubTokenizerKind::kRomanVocab:
      return "roman";
    case SubTokenizerKind::kCharVocab:
      return "char";
  }
  return "?";
}

SubTokenizerKind ParseSubTokenizerKind(std::string_view name) {
  if (name == "bpe") return SubTokenizerKind::kBpe;
  if (name == "roman") return SubTokenizerKind::kRomanVocab;
  if (name == "char") return SubTokenizerKind::kCharVocab;
  throw InvalidArgumentError("unknown sub-tokenizer kind '" +
                             std::string(name) + "'");
}

SubTokenizer SubTokenizer::FromBpe(LanguageTag language, BpeModel model) {
  SubTokenizer sub;
  sub.language_ = language;
  sub.kind_ = SubTokenizerKind::kBpe;
  sub.tokens_ = model.tokens();
  for (std::size_t i = 0; i < sub.tokens_.size(); ++i) {
    sub.ids_.emplace(sub.tokens_[i], static_cast<int>(i));
  }
  sub.unknown_id_ = BpeModel::kUnknownId;
  sub.bpe_ = std::make_shared<const BpeModel>(std::move(model));
  return sub;
}

SubTokenizer SubTokenizer::FromVocab(LanguageTag language,
                                     SubTokenizerKind kind,
                                     std::vector<std::string> tokens) {
  if (kind == SubTokenizerKind::kBpe) {
    throw InvalidArgumentError("BPE sub-tokenizers need a BpeModel");
  }
  if (language == LanguageTag::kEn) {
    throw InvalidArgumentError("English partitions must be BPE");
  }
  SubTokenizer sub;
  sub.language_ = language;
  sub.kind_ = kind;
  sub.tokens_ = std::move(tokens);
  for (std::size_t i = 0; i < sub.tokens_.size(); ++i) {
    if (!sub.ids_.emplace(sub.tokens_[i], static_cast<int>(i)).second) {
      throw InvalidArgumentError("duplicate vocabulary token '" +
                                 sub.tokens_[i] + "'");
    }
  }
  auto unk = sub.ids_.find(std::string(kUnknownToken));
  if (unk == sub.ids_.end()) {
    sub.tokens_.emplace_back(kUnknownToken);
    sub.unknown_id_ = static_cast<int>(sub.tokens_.size() - 1);
    sub.ids_.emplace(sub.tokens_.back(), sub.unknown_id_);
  } else {
    sub.unknown_id_ = unk->second;
  }
  return sub;
}

std::optional<int> SubTokenizer::Find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<ScriptSpan> SegmentScript(std::string_view text,
                                      bool han_as_japanese) {
  const std::u32string cps = DecodeUtf8(text);
  std::vector<ScriptSpan> spans;
  std::size_t start = 0;
  bool open = false;
  LanguageTag current = LanguageTag::kEn;
  auto flush = [&](std::size_t end) {
    if (open) {
      spans.push_back(
          {EncodeUtf8(std::u32string_view(cps).substr(start, end - start)),
           current, start});
    }
    open = false;
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    bool has_lang = true;
    LanguageTag lang = LanguageTag::kEn;
    switch (ClassifyCodePoint(cps[i])) {
      case Script::kHan:
        lang = han_as_japanese ? LanguageTag::kJa : LanguageTag::kZh;
        break;
      case Script::kHangul:
        lang = LanguageTag::kKo;
        break;
      case Script::kKana:
        lang = LanguageTag::kJa;
        break;
      case Script::kLatin:
        lang = LanguageTag::kEn;
        break;
      case Script::kSpace:
        has_lang = false;
        break;
      case Script::kOther:
        throw UnknownGraphemeError(EncodeUtf8(cps[i]), i);
    }
    if (has_lang != open || (open && lang != current)) {
      flush(i);
      if (has_lang) {
        open = true;
        current = lang;
        start = i;
      }
    }
  }
  flush(cps.size());
  return spans;
}

ConcatTokenizer::ConcatTokenizer(std::vector<SubTokenizer> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw InvalidArgumentError("a concatenated tokenizer needs at least one part");
  }
  std::set<LanguageTag> seen;
  int offset = 0;
  for (const SubTokenizer& sub : parts_) {
    if (!seen.insert(sub.language()).second) {
      throw InvalidArgumentError("duplicate language '" +
                                 std::string(ToString(sub.language())) +
                                 "' in concatenated tokenizer");
    }
    const int size = static_cast<int>(sub.size());
    partitions_.push_back({sub.language(), sub.kind(), offset, size});
    offset += size;
  }
  total_ = static_cast<std::size_t>(offset);
  han_as_japanese_ =
      seen.contains(LanguageTag::kJa) && !seen.contains(LanguageTag::kZh);
}

const SubTokenizer* ConcatTokenizer::Find(LanguageTag language) const {
  for (const auto& sub : parts_) {
    if (sub.language() == language) return &sub;
  }
  return nullptr;
}

const Partition* ConcatTokenizer::FindPartition(LanguageTag language) const {
  for (const auto& p : partitions_) {
    if (p.language == language) return &p;
  }
  return nullptr;
}

std::size_t ConcatTokenizer::PartitionIndex(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= total_) {
    throw Error("token id " + std::to_string(id) + " out of range [0, " +
                std::to_string(total_) + ")");
  }
  // Offsets are strictly increasing; find the last offset <= id.
  auto it = std::upper_bound(
      partitions_.begin(), partitions_.end(), id,
      [](int value, const Partition& p) { return value < p.offset; });
  return static_cast<std::size_t>(std::distance(partitions_.begin(), it)) - 1;
}

LanguageTag ConcatTokenizer::Lid(int id) const {
  return partitions_[PartitionIndex(id)].language;
}

void ConcatTokenizer::EncodeSpan(const ScriptSpan& span,
                                 const LexiconSet& lexicons,
                                 TokenSequence* out) const {
  const Partition* partition = FindPartition(span.language);
  if (partition == nullptr) {
    throw Error("no partition for language '" +
                std::string(ToString(span.language)) + "' (segment '" +
                span.text + "' at offset " + std::to_string(span.offset) + ")");
  }
  const SubTokenizer& sub = *Find(span.language);
  auto push = [&](std::string text) {
    auto local = sub.Find(text);
    out->ids.push_back(partition->offset + local.value_or(sub.unknown_id()));
    out->texts.push_back(std::move(text));
    out->langs.push_back(span.language);
  };
  switch (sub.kind()) {
    case SubTokenizerKind::kBpe:
      for (std::string& piece : sub.bpe()->EncodeToPieces(span.text)) {
        push(std::move(piece));
      }
      break;
    case SubTokenizerKind::kRomanVocab:
      for (auto& unit : internal::RomanizeUnits(DecodeUtf8(span.text),
                                                span.language, lexicons,
                                                /*lenient=*/true)) {
        push(std::move(unit.text));
      }
      break;
    case SubTokenizerKind::kCharVocab:
      for (char32_t cp : DecodeUtf8(span.text)) push(EncodeUtf8(cp));
      break;
  }
}

TokenSequence ConcatTokenizer::Encode(std::string_view text,
                                      const LexiconSet& lexicons) const {
  TokenSequence seq;
  for (const ScriptSpan& span : SegmentScript(text, han_as_japanese_)) {
    EncodeSpan(span, lexicons, &seq);
  }
  return seq;
}

TokenSequence ConcatTokenizer::Decode(std::span<const int> ids) const {
  TokenSequence seq;
  seq.ids.reserve(ids.size());
  for (int id : ids) {
    const std::size_t k = PartitionIndex(id);
    const Partition& p = partitions_[k];
    seq.ids.push_back(id);
    seq.texts.push_back(parts_[k].Token(id - p.offset));
    seq.langs.push_back(p.language);
  }
  return seq;
}

std::string JoinTokenTexts(const TokenSequence& seq) {
  std::vector<std::string> words;
  std::vector<std::string> pending;  // BPE pieces of the current word
  auto flush = [&]() {
    if (pending.empty()) return;
    std::string joined = JoinBpePieces(pending);
    for (auto& w : internal::SplitWhitespace(joined)) words.push_back(std::move(w));
    pending.clear();
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq.langs[i] == LanguageTag::kEn) {
      pending.push_back(seq.texts[i]);
      continue;
    }
    flush();
    words.push_back(seq.texts[i]);
  }
  flush();
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::vector<std::string> LoadVocabFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open vocabulary '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError(path, line_no, "empty vocabulary line");
    tokens.push_back(line);
  }
  if (tokens.empty()) throw ParseError(path, 0, "empty vocabulary");
  return tokens;
}

void SaveVocabFile(const std::string& path,
                   std::span<const std::string> tokens) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write vocabulary '" + path + "'");
  for (const auto& t : tokens) out << t << '\n';
}

std::vector<std::string> BuildLexiconVocab(const Lexicon& lexicon,
                                           SubTokenizerKind kind) {
  std::set<std::string> items;
  for (const auto& [surface, entry] : lexicon.entries()) {
    if (kind == SubTokenizerKind::kRomanVocab) {
      for (const auto& r : entry.readings) items.insert(r.roman);
    } else if (kind == SubTokenizerKind::kCharVocab) {
      for (char32_t cp : DecodeUtf8(surface)) items.insert(EncodeUtf8(cp));
    } else {
      throw InvalidArgumentError("lexicon vocabularies are roman or char");
    }
  }
  if (lexicon.language() == LanguageTag::kJa) {
    for (const auto& [surface, entry] : KanaLexicon().entries()) {
      if (kind == SubTokenizerKind::kRomanVocab) {
        for (const auto& r : entry.readings) items.insert(r.roman);
      } else {
        for (char32_t cp : DecodeUtf8(surface)) items.insert(EncodeUtf8(cp));
      }
    }
  }
  std::vector<std::string> out = {std::string(kUnknownToken)};
  out.insert(out.end(), items.begin(), items.end());
  return out;
}

std::vector<std::string> BuildKoreanRomanVocab(
    std::span<const std::string> lines) {
  std::set<std::string> items;
  if (lines.empty()) {
    for (char32_t cp = 0xAC00; cp <= 0xD7A3; ++cp) {
      items.insert(RomanizeKoSyllable(cp));
    }
  } else {
    for (const auto& line : lines) {
      for (char32_t cp : DecodeUtf8(line)) {
        if (IsHangulSyllable(cp)) items.insert(RomanizeKoSyllable(cp));
      }
    }
  }
  std::vector<std::string> out = {std::string(kUnknownToken)};
  out.insert(out.end(), items.begin(), items.end());
  return out;
}

LexiconSet TokenizerBundle::lexicons() const {
  LexiconSet set;
  if (zh_lexicon) set.zh = &*zh_lexicon;
  if (ja_lexicon) set.ja = &*ja_lexicon;
  return set;
}

TokenizerBundle LoadTokenizerManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tokenizer manifest '" + path + "'");
  const std::filesystem::path base =
      std::filesystem::path(path).parent_path();
  auto resolve = [&](std::string_view p) {
    std::filesystem::path fp(p);
    return (fp.is_absolute() ? fp : base / fp).string();
  };

  TokenizerBundle bundle;
  std::vector<SubTokenizer> parts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = internal::Split(line, '\t');
    if (f.size() < 3 || f.size() > 4) {
      throw ParseError(path, line_no,
                       "expected language<TAB>kind<TAB>vocab[<TAB>lexicon]");
    }
    try {
      const LanguageTag language = ParseLanguageTag(f[0]);
      const SubTokenizerKind kind = ParseSubTokenizerKind(f[1]);
      const std::string vocab_path = resolve(f[2]);
      if (kind == SubTokenizerKind::kBpe) {
        parts.push_back(
            SubTokenizer::FromBpe(language, BpeModel::LoadFile(vocab_path)));
      } else {
        parts.push_back(SubTokenizer::FromVocab(language, kind,
                                                LoadVocabFile(vocab_path)));
      }
      if (f.size() == 4) {
        Lexicon lexicon = LoadLexicon(resolve(f[3]), language);
        if (language == LanguageTag::kZh) bundle.zh_lexicon = std::move(lexicon);
        if (language == LanguageTag::kJa) bundle.ja_lexicon = std::move(lexicon);
      } else if (kind == SubTokenizerKind::kRomanVocab &&
                 (language == LanguageTag::kZh || language == LanguageTag::kJa)) {
        throw ParseError(path, line_no,
                         "roman partition for " +
                             std::string(ToString(language)) +
                             " needs a lexicon column");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidArgumentError& e) {
      throw ParseError(path, line_no, e.what());
    }
  }
  if (parts.empty()) throw ParseError(path, 0, "manifest lists no tokenizers");
  bundle.tokenizer = std::make_unique<ConcatTokenizer>(std::move(parts));
  return bundle;
}

}  // namespace romantok

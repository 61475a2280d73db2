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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "romantok/concat_tokenizer.h"
#include "romantok/error.h"

namespace romantok {
namespace {

namespace fs = std::filesystem;

Lexicon ZhLexicon() {
  std::istringstream in("差\tcha4\t900\n差\tcha1\t50\n不\tbu4\n多\tduo1\n我\two3\n是\tshi4\n事\tshi4\n");
  return ParseLexicon(in, LanguageTag::kZh);
}

BpeModel EnModel() {
  return TrainBpe(std::vector<std::string>{"ten minutes", "ten men", "it is ten"}, 40);
}

ConcatTokenizer MakeTokenizer(const Lexicon& zh) {
  std::vector<SubTokenizer> parts;
  parts.push_back(SubTokenizer::FromBpe(LanguageTag::kEn, EnModel()));
  parts.push_back(SubTokenizer::FromVocab(
      LanguageTag::kZh, SubTokenizerKind::kRomanVocab,
      BuildLexiconVocab(zh, SubTokenizerKind::kRomanVocab)));
  return ConcatTokenizer(std::move(parts));
}

TEST_SUITE("concat_tokenizer") {
  TEST_CASE("partitions are contiguous in declaration order") {
    const Lexicon zh = ZhLexicon();
    const ConcatTokenizer tok = MakeTokenizer(zh);
    const auto& p = tok.partitions();
    REQUIRE(p.size() == 2);
    const int en_size = static_cast<int>(EnModel().size());
    CHECK(p[0].offset == 0);
    CHECK(p[0].size == en_size);
    CHECK(p[1].offset == en_size);
    // <unk> + cha1 cha4 bu4 duo1 wo3 shi4
    CHECK(p[1].size == 7);
    CHECK(tok.size() == static_cast<std::size_t>(en_size + 7));
    for (int id = 0; id < static_cast<int>(tok.size()); ++id) {
      CHECK(tok.Lid(id) == (id < en_size ? LanguageTag::kEn : LanguageTag::kZh));
    }
    CHECK_THROWS_AS(tok.Lid(-1), Error);
    CHECK_THROWS_AS(tok.Lid(static_cast<int>(tok.size())), Error);
  }

  TEST_CASE("mixed sentence encodes per script and decodes back") {
    const Lexicon zh = ZhLexicon();
    const ConcatTokenizer tok = MakeTokenizer(zh);
    const LexiconSet set{&zh, nullptr};
    const TokenSequence seq = tok.Encode("差不多 ten minutes", set);
    CHECK(JoinTokenTexts(seq) == "cha4 bu4 duo1 ten minutes");
    const int zh_offset = tok.FindPartition(LanguageTag::kZh)->offset;
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(seq.ids[i] >= zh_offset);
      CHECK(seq.langs[i] == LanguageTag::kZh);
    }
    for (std::size_t i = 3; i < seq.size(); ++i) CHECK(seq.ids[i] < zh_offset);
    CHECK(tok.Decode(seq.ids) == seq);
  }

  TEST_CASE("one <unk> per unknown unit") {
    const Lexicon zh = ZhLexicon();
    const ConcatTokenizer tok = MakeTokenizer(zh);
    const TokenSequence seq = tok.Encode("差好多", LexiconSet{&zh, nullptr});
    REQUIRE(seq.size() == 3);
    const auto* p = tok.FindPartition(LanguageTag::kZh);
    CHECK(seq.ids[1] == p->offset + tok.Find(LanguageTag::kZh)->unknown_id());
    CHECK(seq.texts[1] == "好");
  }

  TEST_CASE("missing partition is a data error") {
    const Lexicon zh = ZhLexicon();
    const ConcatTokenizer tok = MakeTokenizer(zh);
    CHECK_THROWS_AS(tok.Encode("안녕", LexiconSet{&zh, nullptr}), Error);
  }

  TEST_CASE("character vocabularies") {
    const Lexicon zh = ZhLexicon();
    std::vector<SubTokenizer> parts;
    parts.push_back(SubTokenizer::FromBpe(LanguageTag::kEn, EnModel()));
    parts.push_back(SubTokenizer::FromVocab(
        LanguageTag::kZh, SubTokenizerKind::kCharVocab,
        BuildLexiconVocab(zh, SubTokenizerKind::kCharVocab)));
    const ConcatTokenizer tok(std::move(parts));
    CHECK(tok.FindPartition(LanguageTag::kZh)->size == 6 + 1);
    const TokenSequence seq = tok.Encode("差不多 ten", LexiconSet{&zh, nullptr});
    CHECK(JoinTokenTexts(seq) == "差 不 多 ten");
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(ConcatTokenizer({}), InvalidArgumentError);
    std::vector<SubTokenizer> dup;
    dup.push_back(SubTokenizer::FromBpe(LanguageTag::kEn, EnModel()));
    dup.push_back(SubTokenizer::FromBpe(LanguageTag::kEn, EnModel()));
    CHECK_THROWS_AS(ConcatTokenizer(std::move(dup)), InvalidArgumentError);
    CHECK_THROWS_AS(SubTokenizer::FromVocab(LanguageTag::kEn,
                                            SubTokenizerKind::kRomanVocab, {"a"}),
                    InvalidArgumentError);
  }

  TEST_CASE("vocab without <unk> gets one appended") {
    const SubTokenizer sub = SubTokenizer::FromVocab(
        LanguageTag::kKo, SubTokenizerKind::kRomanVocab, {"an", "nyeong"});
    CHECK(sub.size() == 3);
    CHECK(sub.Token(sub.unknown_id()) == kUnknownToken);
  }

  TEST_CASE("script segmentation") {
    const auto spans = SegmentScript("我 like 안녕 かな漢字");
    REQUIRE(spans.size() == 5);
    CHECK(spans[0].language == LanguageTag::kZh);
    CHECK(spans[1] == ScriptSpan{"like", LanguageTag::kEn, 2});
    CHECK(spans[2].language == LanguageTag::kKo);
    CHECK(spans[3].language == LanguageTag::kJa);
    CHECK(spans[3].text == "かな");
    CHECK(spans[4] == ScriptSpan{"漢字", LanguageTag::kZh, 12});
    CHECK(SegmentScript("漢字", true).front().language == LanguageTag::kJa);
    CHECK_THROWS_AS(SegmentScript("a😀"), UnknownGraphemeError);
  }

  TEST_CASE("korean roman vocabulary covers every syllable") {
    CHECK(BuildKoreanRomanVocab().size() == 11172 + 1);
    const auto restricted = BuildKoreanRomanVocab(std::vector<std::string>{"안녕 안"});
    CHECK(restricted == std::vector<std::string>{"<unk>", "an", "nyeong"});
  }

  TEST_CASE("manifest loads relative paths") {
    const fs::path dir = fs::temp_directory_path() / "romantok_concat_test";
    fs::create_directories(dir);
    {
      std::ofstream lex(dir / "zh.tsv");
      lex << "差\tcha4\n不\tbu4\n多\tduo1\n";
    }
    EnModel().SaveFile((dir / "en.bpe").string());
    {
      const Lexicon zh = LoadLexicon((dir / "zh.tsv").string(), LanguageTag::kZh);
      SaveVocabFile((dir / "zh.vocab").string(),
                    BuildLexiconVocab(zh, SubTokenizerKind::kRomanVocab));
    }
    {
      std::ofstream m(dir / "tok.tsv");
      m << "# lang kind path lexicon\nen\tbpe\ten.bpe\nzh\troman\tzh.vocab\tzh.tsv\n";
    }
    const TokenizerBundle bundle = LoadTokenizerManifest((dir / "tok.tsv").string());
    REQUIRE(bundle.zh_lexicon.has_value());
    const TokenSequence seq = bundle.tokenizer->Encode("差不多 ten", bundle.lexicons());
    CHECK(JoinTokenTexts(bundle.tokenizer->Decode(seq.ids)) == "cha4 bu4 duo1 ten");
    {
      std::ofstream m(dir / "bad.tsv");
      m << "zh\troman\tzh.vocab\n";
    }
    CHECK_THROWS_AS(LoadTokenizerManifest((dir / "bad.tsv").string()), ParseError);
    fs::remove_all(dir);
  }
}

}  // namespace
}  // namespace romantok

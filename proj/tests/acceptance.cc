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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "romantok/bpe.h"
#include "romantok/concat_tokenizer.h"
#include "romantok/corpus.h"
#include "romantok/lexicon.h"
#include "romantok/metrics.h"
#include "romantok/ngram.h"
#include "romantok/r2c.h"
#include "romantok/romanizer.h"
#include "romantok/utf8.h"
#include "test_util.h"

namespace romantok {
namespace {

using testing::DataPath;
using testing::ReadLines;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    " + f;
    if (count_ > failures_.size()) {
      s += "\n    ... " + std::to_string(count_ - failures_.size()) + " more";
    }
    return s;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

const Lexicon& ZhLexicon() {
  static const Lexicon lex = LoadLexicon(DataPath("zh_lexicon.tsv"), LanguageTag::kZh);
  return lex;
}

const Lexicon& JaLexicon() {
  static const Lexicon lex = LoadLexicon(DataPath("ja_lexicon.tsv"), LanguageTag::kJa);
  return lex;
}

const BpeModel& EnBpe() {
  static const BpeModel model = TrainBpe(ReadLines(DataPath("en_sample.txt")), 1024);
  return model;
}

std::string Serialize(const BpeModel& model) {
  std::ostringstream out;
  model.Save(out);
  return out.str();
}

void Table1(Check& c) {
  const LexiconSet zh{&ZhLexicon(), nullptr};
  const LexiconSet ja{nullptr, &JaLexicon()};
  const auto row = [&](const std::string& label, const std::string& got,
                       const std::string& want) {
    c.Expect(got == want, label + ": got '" + got + "', want '" + want + "'");
  };
  row("(a)", JoinRomanTokens(Romanize("差 不 多", LanguageTag::kZh, zh)),
      "cha4 bu4 duo1");
  row("(b)", JoinRomanTokens(Romanize("안 녕 하 세 요", LanguageTag::kKo, zh)),
      "an nyeong ha se yo");
  row("(c)", JoinRomanTokens(Romanize("か な 漢 字", LanguageTag::kJa, ja)),
      "ka na kan ji");
  row("(d)", RomanizeMixed("差 不 多 ten minutes", zh), "cha4 bu4 duo1 ten minutes");
}

void KoreanRoundTrip(Check& c) {
  std::set<std::string> romans;
  std::size_t failures = 0;
  for (char32_t cp = 0xAC00; cp <= 0xD7A3; ++cp) {
    const std::string roman = RomanizeKoSyllable(cp);
    romans.insert(roman);
    const std::vector<RomanToken> tokens = RomanizeKo(EncodeUtf8(cp));
    const bool ok = tokens.size() == 1 && tokens[0].text == roman &&
                    DeromanizeKo(tokens) == EncodeUtf8(cp);
    if (!ok) ++failures;
    c.Expect(ok, "syllable U+" + std::to_string(static_cast<unsigned>(cp)));
  }
  c.Expect(romans.size() == 11172,
           "distinct romans: " + std::to_string(romans.size()));
  c.note = std::to_string(romans.size()) + " distinct romans, " +
           std::to_string(failures) + " failures";
}

void VocabReduction(Check& c) {
  const Lexicon& lex = ZhLexicon();
  const oracle::TsvCounts want = oracle::CountLexiconTsv(DataPath("zh_lexicon.tsv"));
  c.Expect(lex.CharVocabSize() == want.chars, "char vocab differs from the TSV count");
  c.Expect(lex.RomanVocabSize() == want.romans, "roman vocab differs from the TSV count");
  c.Expect(lex.PolyphoneCount() == want.polyphones, "polyphone count differs");
  c.Expect(want.chars >= 300, "fewer than 300 characters");
  c.Expect(want.polyphones >= 5, "fewer than 5 polyphones");
  c.Expect(lex.RomanVocabSize() < lex.CharVocabSize(), "no reduction");
  const double formula = VocabReductionPercent(6202, 2263);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", formula);
  c.Expect(std::string(buf) == "63.51", std::string("2263/6202 gives ") + buf);
  std::snprintf(buf, sizeof(buf), "%.2f",
                VocabReductionPercent(lex.CharVocabSize(), lex.RomanVocabSize()));
  c.note = std::to_string(want.chars) + " chars -> " + std::to_string(want.romans) +
           " romans (" + buf + "% reduction), " + std::to_string(want.polyphones) +
           " polyphones; full-scale formula 63.51%";
}

// Mixed sentences built from the sample lexicons and corpora.
std::vector<std::string> MixedSentences(std::size_t n, std::mt19937_64& rng) {
  const auto zh_lines = ReadLines(DataPath("zh_corpus.txt"));
  const auto en_lines = ReadLines(DataPath("en_sample.txt"));
  std::vector<std::string> out;
  std::uniform_int_distribution<std::size_t> zh_pick(0, zh_lines.size() - 1);
  std::uniform_int_distribution<std::size_t> en_pick(0, en_lines.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::u32string zh = DecodeUtf8(zh_lines[zh_pick(rng)]);
    std::istringstream words(en_lines[en_pick(rng)]);
    std::vector<std::string> en;
    for (std::string w; words >> w;) en.push_back(w);
    const std::size_t cut = std::min<std::size_t>(zh.size(), 2 + i % 4);
    const std::size_t take = std::min<std::size_t>(en.size(), 1 + i % 3);
    std::string s = EncodeUtf8(zh.substr(0, cut)) + " ";
    for (std::size_t k = 0; k < take; ++k) s += en[k] + " ";
    s += EncodeUtf8(zh.substr(cut));
    out.push_back(s);
  }
  return out;
}

void ConcatTokenizerCheck(Check& c) {
  const Lexicon& zh = ZhLexicon();
  std::vector<SubTokenizer> parts;
  parts.push_back(SubTokenizer::FromBpe(LanguageTag::kEn, EnBpe()));
  parts.push_back(SubTokenizer::FromVocab(
      LanguageTag::kZh, SubTokenizerKind::kRomanVocab,
      BuildLexiconVocab(zh, SubTokenizerKind::kRomanVocab)));
  const ConcatTokenizer tok(std::move(parts));
  const int v_zh = static_cast<int>(zh.RomanVocabSize()) + 1;  // + <unk>
  const auto& p = tok.partitions();
  c.Expect(p.size() == 2 && p[0].language == LanguageTag::kEn && p[0].offset == 0 &&
               p[0].size == 1024,
           "EN partition is not [0,1024)");
  c.Expect(p.size() == 2 && p[1].language == LanguageTag::kZh &&
               p[1].offset == 1024 && p[1].size == v_zh,
           "ZH partition is not [1024,1024+V_ZH)");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> id_dist(0, static_cast<int>(tok.size()) - 1);
  int lid_errors = 0;
  for (int i = 0; i < 10000; ++i) {
    const int id = id_dist(rng);
    const LanguageTag want = id < 1024 ? LanguageTag::kEn : LanguageTag::kZh;
    if (tok.Lid(id) != want) ++lid_errors;
  }
  c.Expect(lid_errors == 0, std::to_string(lid_errors) + " LID errors");

  const LexiconSet set{&zh, nullptr};
  int round_trip_errors = 0;
  for (const std::string& s : MixedSentences(50, rng)) {
    const TokenSequence seq = tok.Encode(s, set);
    const bool ok = tok.Decode(seq.ids) == seq &&
                    JoinTokenTexts(seq) == RomanizeMixed(s, set) &&
                    std::count(seq.texts.begin(), seq.texts.end(),
                               std::string(kUnknownToken)) == 0;
    if (!ok) ++round_trip_errors;
    c.Expect(ok, "round trip: " + s);
  }
  c.note = "EN [0,1024), ZH [1024," + std::to_string(1024 + v_zh) +
           "); 10000 LID ids, 50 sentences, " + std::to_string(round_trip_errors) +
           " round-trip errors";
}

void MetricsCheck(Check& c) {
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 6), sym(0, 2);
  int mismatches = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::string> ref(len(rng)), hyp(len(rng));
    for (auto& t : ref) t = alphabet[sym(rng)];
    for (auto& t : hyp) t = alphabet[sym(rng)];
    const AlignmentResult got = EditAlign(ref, hyp);
    const oracle::Edits want = oracle::BruteForceAlign(ref, hyp);
    const bool ok = got.substitutions == want.s && got.deletions == want.d &&
                    got.insertions == want.i && got.ref_len == ref.size() &&
                    got.hits + got.substitutions + got.deletions == ref.size();
    if (!ok) ++mismatches;
    c.Expect(ok, "pair #" + std::to_string(trial));
  }
  const AlignmentResult mer = Mer("差不多 ten minutes", "差多 ten minute");
  c.Expect(mer.errors() == 2 && mer.ref_len == 5 && FormatRate(mer) == "40.00",
           "MER hand case gives " + FormatRate(mer));
  c.note = "10000 sampled pairs, " + std::to_string(mismatches) +
           " mismatches; hand case MER " + FormatRate(mer) + "%";
}

void R2CCheck(Check& c) {
  std::mt19937_64 rng(31337);
  const CharNGramModel small = testing::SmallModel(3);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Lattice lattice = testing::RandomLattice(rng, 10000);
    const DecodedPath got = ViterbiBest(lattice, small);
    const oracle::PathScore want = oracle::BruteForceBest(lattice, small, 1.0);
    const bool ok = got.arcs == want.arcs && got.text == want.text &&
                    std::abs(got.score - want.score) <= 1e-9 * std::abs(want.score);
    if (!ok) ++mismatches;
    c.Expect(ok, "lattice #" + std::to_string(i));
  }

  // Unambiguous lexicon: first character per roman, default reading only.
  Lexicon unambiguous(LanguageTag::kZh);
  std::set<std::string> used;
  std::vector<std::string> surfaces;
  for (const auto& [surface, entry] : ZhLexicon().entries()) {
    if (used.insert(entry.Default().roman).second) {
      unambiguous.Add(surface, entry.Default().roman, 1.0);
      surfaces.push_back(surface);
    }
  }
  const ReverseLexicon unambiguous_rev = Reverse(unambiguous);
  const auto corpus = ReadLines(DataPath("zh_corpus.txt"));
  const CharNGramModel model = TrainCharNGram(corpus, 3);
  std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
  int identity_errors = 0;
  for (int i = 0; i < 200; ++i) {
    std::string text;
    for (int k = 0; k < 8; ++k) text += surfaces[pick(rng)];
    std::vector<std::string> romans;
    for (const auto& t : RomanizeZh(text, unambiguous)) romans.push_back(t.text);
    if (ViterbiDecode(BuildLattice(romans, unambiguous_rev), model) != text) {
      ++identity_errors;
    }
  }
  c.Expect(identity_errors == 0,
           std::to_string(identity_errors) + " identity round-trip failures");

  // Held-in accuracy on the shipped corpus, order 3.
  const ReverseLexicon rev = Reverse(ZhLexicon());
  std::size_t total = 0, correct = 0;
  for (const std::string& line : corpus) {
    std::vector<std::string> romans;
    for (const auto& t : RomanizeZh(line, ZhLexicon())) romans.push_back(t.text);
    const std::u32string want = DecodeUtf8(line);
    const std::u32string got = DecodeUtf8(ViterbiDecode(BuildLattice(romans, rev), model));
    total += want.size();
    for (std::size_t k = 0; k < want.size() && k < got.size(); ++k) {
      if (want[k] == got[k]) ++correct;
    }
  }
  const double accuracy = 100.0 * static_cast<double>(correct) / total;
  c.Expect(accuracy >= 95.0, "held-in accuracy " + std::to_string(accuracy));
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "200 lattices, %d mismatches; identity failures %d; held-in "
                "accuracy %.2f%% (%zu/%zu chars, n=3)",
                mismatches, identity_errors, accuracy, correct, total);
  c.note = buf;
}

void BpeCheck(Check& c) {
  const auto lines = ReadLines(DataPath("en_sample.txt"));
  const BpeModel& first = EnBpe();
  const BpeModel second = TrainBpe(lines, 1024);
  c.Expect(Serialize(first) == Serialize(second), "retraining is not byte-identical");
  c.Expect(first.size() == 1024, "vocab size " + std::to_string(first.size()));
  int round_trip_errors = 0;
  for (const std::string& line : lines) {
    std::string want;
    std::istringstream words(ToLower(line));
    for (std::string w; words >> w;) want += (want.empty() ? "" : " ") + w;
    const std::vector<int> ids = first.Encode(line);
    const bool ok = first.Decode(ids) == want &&
                    std::find(ids.begin(), ids.end(), BpeModel::kUnknownId) == ids.end();
    if (!ok) ++round_trip_errors;
    c.Expect(ok, "round trip: " + line);
  }
  c.note = std::to_string(first.size()) + " tokens, " +
           std::to_string(first.merges().size()) + " merges; " +
           std::to_string(lines.size()) + " lines, " +
           std::to_string(round_trip_errors) + " round-trip errors";
}

Manifest TenHourManifest(std::mt19937_64& rng) {
  static const std::vector<std::string> texts = {"我们 go 吧", "hello there",
                                                 "差不多", "ten minutes 差不多"};
  std::uniform_int_distribution<int> quarter(4, 80);  // 1 s .. 20 s in 0.25 s steps
  Manifest m;
  double total = 0.0;
  int i = 0;
  while (true) {
    double d = quarter(rng) * 0.25;
    if (total + d >= 36000.0 - 1.0) d = 36000.0 - total;
    m.Add("utt" + std::to_string(i), d, texts[i % texts.size()]);
    total += d;
    ++i;
    if (total >= 36000.0) break;
  }
  return m;
}

std::map<std::string, int> Multiset(const Manifest& m) {
  std::map<std::string, int> out;
  for (const auto& r : m.records()) ++out[r.id];
  return out;
}

void BalanceCheck(Check& c) {
  std::mt19937_64 rng(5);
  const Manifest ten = TenHourManifest(rng);
  c.Expect(ten.total_duration() == 36000.0, "fixture is not exactly 10 h");
  const BalanceRequest up{&ten, 30.0};
  const auto a = Balance(std::span(&up, 1), 17);
  bool exact = a[0].size() == 3 * ten.size();
  for (const auto& [id, n] : Multiset(a[0])) exact = exact && n == 3;
  c.Expect(exact, "30 h is not an exact 3x multiset");

  const std::vector<BalanceRequest> requests = {{&ten, 30.0}, {&ten, 12.3}, {&ten, 4.2}};
  const auto r1 = Balance(requests, 123);
  const auto r2 = Balance(requests, 123);
  bool same = true;
  for (std::size_t k = 0; k < r1.size(); ++k) same = same && r1[k].records() == r2[k].records();
  c.Expect(same, "seeded runs differ");
  const auto r3 = Balance(requests, 124);
  c.Expect(r3[1].records() != r1[1].records(), "different seeds give identical draws");

  double worst = 0.0;
  for (std::size_t k = 0; k < requests.size(); ++k) {
    const double gap = std::abs(r1[k].total_duration() - requests[k].target_hours * 3600.0);
    worst = std::max(worst, gap);
    c.Expect(gap <= ten.MaxDuration(), "target " +
                                           std::to_string(requests[k].target_hours) +
                                           " h missed by " + std::to_string(gap) + " s");
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%zu utts x3 exact; worst gap %.2f s (max utterance %.2f s)",
                ten.size(), worst, ten.MaxDuration());
  c.note = buf;
}

}  // namespace
}  // namespace romantok

int main() {
  using namespace romantok;
  const std::vector<Criterion> criteria = {
      {"table1_exactness", 1.0, Table1},
      {"korean_round_trip", 5.0, KoreanRoundTrip},
      {"vocab_reduction", 0.0, VocabReduction},
      {"concat_tokenizer", 5.0, ConcatTokenizerCheck},
      {"metrics_oracle", 30.0, MetricsCheck},
      {"r2c", 60.0, R2CCheck},
      {"bpe", 0.0, BpeCheck},
      {"balancing", 0.0, BalanceCheck},
  };
  // Shared fixtures are loaded outside the timed sections.
  ZhLexicon();
  JaLexicon();
  EnBpe();
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && seconds > cr.limit_seconds) {
      check.Expect(false, "took " + std::to_string(seconds) + " s, limit " +
                              std::to_string(cr.limit_seconds) + " s");
    }
    const bool ok = check.ok();
    if (!ok) ++failed;
    std::printf("%s %-18s (%.3f s) %s%s\n", ok ? "PASS" : "FAIL", cr.name.c_str(),
                seconds, check.note.c_str(), ok ? "" : check.Summary().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

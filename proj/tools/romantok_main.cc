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

// romantok: romanization, concatenated tokenization, roman-to-character
// decoding and mixed error rate scoring from the command line.
//
// Exit status: 0 success, 1 usage error, 2 data or parse error,
// 3 internal invariant violation. Diagnostics go to stderr only.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "romantok/bpe.h"
#include "romantok/concat_tokenizer.h"
#include "romantok/corpus.h"
#include "romantok/error.h"
#include "romantok/lexicon.h"
#include "romantok/metrics.h"
#include "romantok/ngram.h"
#include "romantok/r2c.h"
#include "romantok/romanizer.h"
#include "romantok/utf8.h"

namespace {

using namespace romantok;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// Usage errors raised after parsing (missing companion flag etc.).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(NormalizeNfc(line));
  }
  return lines;
}

std::vector<std::string> ReadInput(const std::string& path) {
  if (path.empty() || path == "-") return ReadLines(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return ReadLines(in);
}

// Writes to `path`, or stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> ParseIds(const std::string& line) {
  std::vector<int> ids;
  std::istringstream in(line);
  std::string field;
  while (in >> field) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size()) throw Error("invalid token id '" + field + "'");
    ids.push_back(static_cast<int>(value));
  }
  return ids;
}

Lexicon LoadJaReverseSource(const std::string& path) {
  return MergeLexicons(KanaLexicon(), LoadLexicon(path, LanguageTag::kJa));
}

// ---------------------------------------------------------------- romanize

struct RomanizeArgs {
  std::string lang;
  std::string lexicon, zh_lexicon, ja_lexicon;
  std::string input, output;
};

void RunRomanize(const RomanizeArgs& a) {
  std::optional<Lexicon> zh, ja;
  const std::string zh_path = a.lang == "zh" && !a.lexicon.empty() ? a.lexicon : a.zh_lexicon;
  const std::string ja_path = a.lang == "ja" && !a.lexicon.empty() ? a.lexicon : a.ja_lexicon;
  if (a.lang == "zh" && zh_path.empty()) throw UsageError("--lang zh needs --lexicon");
  if (a.lang == "ja" && ja_path.empty()) throw UsageError("--lang ja needs --lexicon");
  if (!zh_path.empty()) zh = LoadLexicon(zh_path, LanguageTag::kZh);
  if (!ja_path.empty()) ja = LoadLexicon(ja_path, LanguageTag::kJa);
  LexiconSet set;
  if (zh) set.zh = &*zh;
  if (ja) set.ja = &*ja;
  const bool han_as_ja = a.lang == "ja" || (!zh && ja);

  Output out(a.output);
  const auto lines = ReadInput(a.input);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      if (a.lang == "mixed") {
        out.stream() << RomanizeMixed(lines[i], set, han_as_ja) << '\n';
      } else {
        out.stream() << JoinRomanTokens(Romanize(
                            lines[i], ParseLanguageTag(a.lang), set))
                     << '\n';
      }
    } catch (const UnknownGraphemeError&) {
      std::cerr << "line " << (i + 1) << ": " << lines[i] << '\n';
      throw;
    }
  }
}

// ---------------------------------------------------------------- tokenize

struct TokenizeArgs {
  std::string tokenizer, input, output;
};

void RunTokenize(const TokenizeArgs& a) {
  const TokenizerBundle bundle = LoadTokenizerManifest(a.tokenizer);
  const LexiconSet set = bundle.lexicons();
  Output out(a.output);
  for (const std::string& line : ReadInput(a.input)) {
    const TokenSequence seq = bundle.tokenizer->Encode(line, set);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      out.stream() << (i ? " " : "") << seq.ids[i];
    }
    out.stream() << '\n';
  }
}

void RunDetokenize(const TokenizeArgs& a) {
  const TokenizerBundle bundle = LoadTokenizerManifest(a.tokenizer);
  Output out(a.output);
  for (const std::string& line : ReadInput(a.input)) {
    const std::vector<int> ids = ParseIds(line);
    out.stream() << JoinTokenTexts(bundle.tokenizer->Decode(ids)) << '\n';
  }
}

// ---------------------------------------------------------------- training

struct TrainArgs {
  std::string corpus, output;
  std::size_t vocab = 1024;
  int order = 3;
  double floor = CharNGramModel::kDefaultFloor;
};

void RunBpeTrain(const TrainArgs& a) {
  const auto lines = ReadInput(a.corpus);
  const BpeModel model = TrainBpe(lines, a.vocab);
  Output out(a.output);
  model.Save(out.stream());
  std::cerr << "bpe: " << model.size() << " tokens, " << model.merges().size()
            << " merges\n";
}

void RunNgramTrain(const TrainArgs& a) {
  const auto lines = ReadInput(a.corpus);
  const CharNGramModel model = TrainCharNGram(lines, a.order, a.floor);
  Output out(a.output);
  model.Save(out.stream());
  std::cerr << "ngram: order " << model.order() << ", " << model.vocab_size()
            << " characters\n";
}

struct VocabArgs {
  std::string lexicon, lang = "zh", kind = "roman", corpus, output;
};

void RunBuildVocab(const VocabArgs& a) {
  std::vector<std::string> tokens;
  const LanguageTag lang = ParseLanguageTag(a.lang);
  const SubTokenizerKind kind = ParseSubTokenizerKind(a.kind);
  if (lang == LanguageTag::kKo) {
    if (kind != SubTokenizerKind::kRomanVocab) {
      throw UsageError("Korean vocabularies are built for --kind roman");
    }
    const auto lines = a.corpus.empty() ? std::vector<std::string>{}
                                        : ReadInput(a.corpus);
    tokens = BuildKoreanRomanVocab(lines);
  } else {
    if (a.lexicon.empty()) throw UsageError("--lexicon is required for zh/ja");
    tokens = BuildLexiconVocab(LoadLexicon(a.lexicon, lang), kind);
  }
  Output out(a.output);
  for (const auto& t : tokens) out.stream() << t << '\n';
}

// ---------------------------------------------------------------- r2c

struct R2CArgs {
  std::string rev_lexicon, ngram, lang = "zh", tokenizer, input, output;
  double alpha = 1.0;
  bool ids = false;
};

R2CDecoder MakeDecoder(LanguageTag lang, const std::string& lexicon_path,
                       const std::string& ngram_path, double alpha) {
  R2CDecoder decoder(alpha);
  Lexicon source = lang == LanguageTag::kJa
                       ? LoadJaReverseSource(lexicon_path)
                       : LoadLexicon(lexicon_path, lang);
  decoder.AddLanguage(lang, Reverse(source), CharNGramModel::LoadFile(ngram_path));
  return decoder;
}

// Tokens found in the reverse lexicon belong to `lang`; the rest are English.
TokenSequence ParseRomanLine(const std::string& line, LanguageTag lang,
                             const ReverseLexicon& rev) {
  TokenSequence seq;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const bool native = rev.Find(token) != nullptr;
    seq.ids.push_back(-1);
    seq.texts.push_back(native ? token : token + std::string(BpeModel::kEndOfWord));
    seq.langs.push_back(native ? lang : LanguageTag::kEn);
  }
  return seq;
}

void RunR2C(const R2CArgs& a) {
  const LanguageTag lang = ParseLanguageTag(a.lang);
  if (lang != LanguageTag::kZh && lang != LanguageTag::kJa) {
    throw UsageError("--lang must be zh or ja");
  }
  if (a.ids && a.tokenizer.empty()) throw UsageError("--ids needs --tokenizer");
  const R2CDecoder decoder = MakeDecoder(lang, a.rev_lexicon, a.ngram, a.alpha);
  const ReverseLexicon rev = Reverse(lang == LanguageTag::kJa
                                         ? LoadJaReverseSource(a.rev_lexicon)
                                         : LoadLexicon(a.rev_lexicon, lang));
  std::optional<TokenizerBundle> bundle;
  if (a.ids) bundle = LoadTokenizerManifest(a.tokenizer);
  Output out(a.output);
  for (const std::string& line : ReadInput(a.input)) {
    const TokenSequence seq = a.ids ? bundle->tokenizer->Decode(ParseIds(line))
                                    : ParseRomanLine(line, lang, rev);
    out.stream() << decoder.Decode(seq) << '\n';
  }
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string metric = "mer", ref, hyp;
  bool tsv = false;
  bool no_normalize = false;
};

struct Pair {
  std::string ref, hyp;
};

std::map<std::string, std::string> ReadTsv(const std::string& path) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (const std::string& line : ReadInput(path)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path, line_no, "expected id<TAB>text");
    }
    if (!out.emplace(line.substr(0, tab), line.substr(tab + 1)).second) {
      throw ParseError(path, line_no, "duplicate id '" + line.substr(0, tab) + "'");
    }
  }
  return out;
}

std::vector<Pair> LoadPairs(const ScoreArgs& a) {
  std::vector<Pair> pairs;
  if (a.tsv) {
    const auto refs = ReadTsv(a.ref);
    const auto hyps = ReadTsv(a.hyp);
    if (refs.size() != hyps.size()) {
      throw Error("reference has " + std::to_string(refs.size()) +
                  " ids, hypothesis has " + std::to_string(hyps.size()));
    }
    for (const auto& [id, text] : refs) {
      auto it = hyps.find(id);
      if (it == hyps.end()) throw Error("id '" + id + "' missing from hypothesis");
      pairs.push_back({text, it->second});
    }
    return pairs;
  }
  const auto refs = ReadInput(a.ref);
  const auto hyps = ReadInput(a.hyp);
  if (refs.size() != hyps.size()) {
    throw Error("reference has " + std::to_string(refs.size()) +
                " lines, hypothesis has " + std::to_string(hyps.size()));
  }
  for (std::size_t i = 0; i < refs.size(); ++i) pairs.push_back({refs[i], hyps[i]});
  return pairs;
}

void PrintReport(std::ostream& out, Metric headline,
                 const std::vector<Pair>& pairs, const Normalization& norm) {
  struct Row {
    std::size_t utts = 0;
    AlignmentResult mer, cer, wer;
  };
  std::map<std::string, Row> rows;
  Row all;
  for (const Pair& p : pairs) {
    std::string cls;
    try {
      cls = std::string(ToString(Classify(p.ref)));
    } catch (const InvalidArgumentError&) {
      cls = "OTHER";
    }
    for (Row* row : {&rows[cls], &all}) {
      ++row->utts;
      row->mer += Mer(p.ref, p.hyp, norm);
      row->cer += Cer(p.ref, p.hyp, norm);
      row->wer += Wer(p.ref, p.hyp, norm);
    }
  }
  const AlignmentResult& head = headline == Metric::kMer   ? all.mer
                                : headline == Metric::kCer ? all.cer
                                                           : all.wer;
  std::string name(ToString(headline));
  for (char& c : name) c = static_cast<char>(c - 'a' + 'A');
  out << name << ' ' << FormatRate(head) << " S=" << head.substitutions
      << " D=" << head.deletions << " I=" << head.insertions
      << " N=" << head.ref_len << '\n';
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-6s %6s %8s %8s %8s\n", "class", "utts",
                "MER", "CER", "WER");
  out << buf;
  auto print = [&](const std::string& label, const Row& r) {
    std::snprintf(buf, sizeof(buf), "%-6s %6zu %8s %8s %8s\n", label.c_str(),
                  r.utts, FormatRate(r.mer).c_str(), FormatRate(r.cer).c_str(),
                  FormatRate(r.wer).c_str());
    out << buf;
  };
  for (const char* cls : {"ZH", "EN", "CS", "OTHER"}) {
    auto it = rows.find(cls);
    if (it != rows.end()) print(cls, it->second);
  }
  print("ALL", all);
}

void RunScore(const ScoreArgs& a) {
  Normalization norm;
  if (a.no_normalize) norm = {false, false};
  PrintReport(std::cout, ParseMetric(a.metric), LoadPairs(a), norm);
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string mode;
  std::vector<std::string> manifests;
  std::string corpus, lexicon, lang = "zh";
};

void RunStats(const StatsArgs& a) {
  if (a.mode == "composition") {
    if (a.manifests.empty()) throw UsageError("--mode composition needs --manifest");
    std::vector<std::string> names;
    std::vector<CompositionStats> stats;
    for (const auto& path : a.manifests) {
      names.push_back(std::filesystem::path(path).stem().string());
      stats.push_back(ComputeComposition(LoadManifest(path)));
    }
    std::cout << FormatCompositionTable(names, stats);
    return;
  }
  if (a.corpus.empty() || a.lexicon.empty()) {
    throw UsageError("--mode vocab needs --corpus and --lexicon");
  }
  const Lexicon lexicon = LoadLexicon(a.lexicon, ParseLanguageTag(a.lang));
  const VocabStats s = ComputeVocabStats(ReadInput(a.corpus), lexicon);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", s.reduction_percent());
  std::cout << "chars\t" << s.chars << "\nromans\t" << s.romans
            << "\nunknown\t" << s.unknown << "\nreduction(%)\t" << buf << '\n';
}

// ---------------------------------------------------------------- balance

struct BalanceArgs {
  std::vector<std::string> manifests, outputs;
  std::vector<double> targets;
  std::uint64_t seed = 0;
};

void RunBalance(const BalanceArgs& a) {
  if (a.manifests.size() != a.targets.size()) {
    throw UsageError("give one --target-hours per --manifest");
  }
  if (a.outputs.size() != a.manifests.size() &&
      !(a.outputs.empty() && a.manifests.size() == 1)) {
    throw UsageError("give one --output per --manifest");
  }
  std::vector<Manifest> sources;
  for (const auto& path : a.manifests) sources.push_back(LoadManifest(path));
  std::vector<BalanceRequest> requests;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    requests.push_back({&sources[i], a.targets[i]});
  }
  const auto balanced = Balance(requests, a.seed);
  for (std::size_t i = 0; i < balanced.size(); ++i) {
    Output out(a.outputs.empty() ? std::string() : a.outputs[i]);
    WriteManifest(out.stream(), balanced[i]);
    std::cerr << a.manifests[i] << ": " << balanced[i].size() << " utterances, "
              << balanced[i].total_duration() / 3600.0 << " h\n";
  }
}

// ---------------------------------------------------------------- pipeline

// key = value lines; '#' comments.
//   tokenizer  tokenizer manifest (required)
//   ngram      n-gram model for the tokenizer's ZH (or JA) partition
//   input      reference transcripts, one per line (required)
//   output     where hypotheses are written (optional)
//   metric     cer | wer | mer (default mer)
//   alpha      emission exponent (default 1.0)
std::map<std::string, std::string> ReadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pipeline config '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  static const std::set<std::string> kKeys = {"tokenizer", "ngram", "input",
                                              "output", "metric", "alpha"};
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path, line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (!kKeys.contains(key)) throw ParseError(path, line_no, "unknown key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  for (const char* required : {"tokenizer", "input"}) {
    if (!kv.contains(required)) {
      throw ParseError(path, 0, std::string("missing key '") + required + "'");
    }
  }
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  for (const char* key : {"tokenizer", "ngram", "input", "output"}) {
    auto it = kv.find(key);
    if (it != kv.end() && std::filesystem::path(it->second).is_relative()) {
      it->second = (base / it->second).string();
    }
  }
  return kv;
}

void RunPipeline(const std::string& config_path) {
  const auto cfg = ReadConfig(config_path);
  const TokenizerBundle bundle = LoadTokenizerManifest(cfg.at("tokenizer"));
  const double alpha = cfg.contains("alpha") ? std::stod(cfg.at("alpha")) : 1.0;
  R2CDecoder decoder(alpha);
  if (cfg.contains("ngram")) {
    const CharNGramModel model = CharNGramModel::LoadFile(cfg.at("ngram"));
    if (bundle.zh_lexicon) {
      decoder.AddLanguage(LanguageTag::kZh, Reverse(*bundle.zh_lexicon), model);
    } else if (bundle.ja_lexicon) {
      decoder.AddLanguage(LanguageTag::kJa,
                          Reverse(MergeLexicons(KanaLexicon(), *bundle.ja_lexicon)),
                          model);
    }
  }
  const auto refs = ReadInput(cfg.at("input"));
  std::vector<Pair> pairs;
  std::optional<Output> hyp_out;
  if (cfg.contains("output")) hyp_out.emplace(cfg.at("output"));
  const LexiconSet set = bundle.lexicons();
  for (const std::string& ref : refs) {
    const TokenSequence encoded = bundle.tokenizer->Encode(ref, set);
    const TokenSequence decoded = bundle.tokenizer->Decode(encoded.ids);
    std::string hyp = decoder.Decode(decoded);
    if (hyp_out) hyp_out->stream() << hyp << '\n';
    pairs.push_back({ref, std::move(hyp)});
  }
  const Metric metric = ParseMetric(cfg.contains("metric") ? cfg.at("metric") : "mer");
  PrintReport(std::cout, metric, pairs, Normalization{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"romantok: romanization-based tokenization toolkit"};
  app.require_subcommand(1);

  RomanizeArgs rom;
  auto* c_rom = app.add_subcommand("romanize", "Native script -> roman tokens");
  c_rom->add_option("--lang", rom.lang, "zh, ko, ja or mixed")
      ->required()
      ->check(CLI::IsMember({"zh", "ko", "ja", "mixed"}));
  c_rom->add_option("--lexicon", rom.lexicon, "Lexicon TSV for --lang zh/ja");
  c_rom->add_option("--zh-lexicon", rom.zh_lexicon, "Mandarin lexicon (mixed)");
  c_rom->add_option("--ja-lexicon", rom.ja_lexicon, "Japanese lexicon (mixed)");
  c_rom->add_option("--input", rom.input, "Input file (default stdin)");
  c_rom->add_option("--output", rom.output, "Output file (default stdout)");

  TokenizeArgs tok;
  auto* c_tok = app.add_subcommand("tokenize", "Text -> global token ids");
  c_tok->add_option("--tokenizer", tok.tokenizer, "Tokenizer manifest")->required();
  c_tok->add_option("--input", tok.input);
  c_tok->add_option("--output", tok.output);
  TokenizeArgs detok;
  auto* c_detok = app.add_subcommand("detokenize", "Token ids -> romanized text");
  c_detok->add_option("--tokenizer", detok.tokenizer, "Tokenizer manifest")->required();
  c_detok->add_option("--input", detok.input);
  c_detok->add_option("--output", detok.output);

  TrainArgs bpe;
  auto* c_bpe = app.add_subcommand("bpe-train", "Train an English BPE model");
  c_bpe->add_option("--corpus", bpe.corpus, "Training text")->required();
  c_bpe->add_option("--vocab", bpe.vocab, "Target vocabulary size")
      ->check(CLI::PositiveNumber);
  c_bpe->add_option("--output", bpe.output, "Model file (default stdout)");

  TrainArgs ngram;
  auto* c_ngram = app.add_subcommand("ngram-train", "Train a character n-gram model");
  c_ngram->add_option("--corpus", ngram.corpus, "Native-script text")->required();
  c_ngram->add_option("--order", ngram.order, "n in [1, 5]")->check(CLI::Range(1, 5));
  c_ngram->add_option("--floor", ngram.floor, "Uniform interpolation weight")
      ->check(CLI::Range(1e-9, 0.5));
  c_ngram->add_option("--output", ngram.output, "Model file (default stdout)");

  VocabArgs vocab;
  auto* c_vocab = app.add_subcommand("build-vocab", "Write a sub-tokenizer vocabulary");
  c_vocab->add_option("--lang", vocab.lang)->check(CLI::IsMember({"zh", "ko", "ja"}));
  c_vocab->add_option("--kind", vocab.kind)->check(CLI::IsMember({"roman", "char"}));
  c_vocab->add_option("--lexicon", vocab.lexicon);
  c_vocab->add_option("--corpus", vocab.corpus, "Korean text to restrict the vocabulary");
  c_vocab->add_option("--output", vocab.output);

  R2CArgs r2c;
  auto* c_r2c = app.add_subcommand("r2c", "Roman tokens -> native characters");
  c_r2c->add_option("--rev-lexicon", r2c.rev_lexicon, "Lexicon TSV to invert")->required();
  c_r2c->add_option("--ngram", r2c.ngram, "Character n-gram model")->required();
  c_r2c->add_option("--lang", r2c.lang)->check(CLI::IsMember({"zh", "ja"}));
  c_r2c->add_option("--alpha", r2c.alpha, "Emission weight exponent");
  c_r2c->add_flag("--ids", r2c.ids, "Input lines are token ids");
  c_r2c->add_option("--tokenizer", r2c.tokenizer, "Tokenizer manifest (with --ids)");
  c_r2c->add_option("--input", r2c.input);
  c_r2c->add_option("--output", r2c.output);

  ScoreArgs score;
  auto* c_score = app.add_subcommand("score", "CER / WER / MER report");
  c_score->add_option("--metric", score.metric)->check(CLI::IsMember({"cer", "wer", "mer"}));
  c_score->add_option("ref", score.ref, "Reference file")->required();
  c_score->add_option("hyp", score.hyp, "Hypothesis file")->required();
  c_score->add_flag("--tsv", score.tsv, "Files are id<TAB>text");
  c_score->add_flag("--no-normalize", score.no_normalize,
                    "Keep case and punctuation");

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Corpus composition or vocabulary statistics");
  c_stats->add_option("--mode", stats.mode)
      ->required()
      ->check(CLI::IsMember({"composition", "vocab"}));
  c_stats->add_option("--manifest", stats.manifests, "JSONL manifest (repeatable)");
  c_stats->add_option("--corpus", stats.corpus);
  c_stats->add_option("--lexicon", stats.lexicon);
  c_stats->add_option("--lang", stats.lang)->check(CLI::IsMember({"zh", "ja"}));

  BalanceArgs bal;
  auto* c_bal = app.add_subcommand("balance", "Resample manifests to target hours");
  c_bal->add_option("--manifest", bal.manifests)->required();
  c_bal->add_option("--target-hours", bal.targets)->required()->check(CLI::PositiveNumber);
  c_bal->add_option("--seed", bal.seed)->required();
  c_bal->add_option("--output", bal.outputs);

  std::string pipeline_config;
  auto* c_pipe = app.add_subcommand("pipeline", "tokenize -> r2c -> score end to end");
  c_pipe->add_option("--config", pipeline_config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_rom) RunRomanize(rom);
    if (*c_tok) RunTokenize(tok);
    if (*c_detok) RunDetokenize(detok);
    if (*c_bpe) RunBpeTrain(bpe);
    if (*c_ngram) RunNgramTrain(ngram);
    if (*c_vocab) RunBuildVocab(vocab);
    if (*c_r2c) RunR2C(r2c);
    if (*c_score) RunScore(score);
    if (*c_stats) RunStats(stats);
    if (*c_bal) RunBalance(bal);
    if (*c_pipe) RunPipeline(pipeline_config);
  } catch (const UsageError& e) {
    std::cerr << "romantok: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgumentError& e) {
    std::cerr << "romantok: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedLanguageError& e) {
    std::cerr << "romantok: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "romantok: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "romantok: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

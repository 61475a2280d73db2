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

// Python bindings: romantok._core.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;

namespace romantok {
namespace {

LanguageTag Lang(const std::string& name) { return ParseLanguageTag(name); }

LexiconSet MakeSet(const Lexicon* zh, const Lexicon* ja) { return {zh, ja}; }

std::vector<std::string> Texts(const std::vector<RomanToken>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

// Owns a loaded tokenizer manifest; the lexicon pointers inside stay valid
// for the lifetime of this object.
class PyTokenizer {
 public:
  explicit PyTokenizer(const std::string& manifest)
      : bundle_(std::make_unique<TokenizerBundle>(LoadTokenizerManifest(manifest))) {}

  py::dict Encode(const std::string& text) const {
    return ToDict(bundle_->tokenizer->Encode(NormalizeNfc(text), bundle_->lexicons()));
  }
  py::dict Decode(const std::vector<int>& ids) const {
    return ToDict(bundle_->tokenizer->Decode(ids));
  }
  std::string DecodeText(const std::vector<int>& ids) const {
    return JoinTokenTexts(bundle_->tokenizer->Decode(ids));
  }
  std::string Lid(int id) const {
    return std::string(ToString(bundle_->tokenizer->Lid(id)));
  }
  std::size_t size() const { return bundle_->tokenizer->size(); }
  std::vector<py::tuple> Partitions() const {
    std::vector<py::tuple> out;
    for (const Partition& p : bundle_->tokenizer->partitions()) {
      out.push_back(py::make_tuple(std::string(ToString(p.language)),
                                   std::string(ToString(p.kind)), p.offset,
                                   p.offset + p.size));
    }
    return out;
  }
  const TokenizerBundle& bundle() const { return *bundle_; }

 private:
  static py::dict ToDict(const TokenSequence& seq) {
    std::vector<std::string> langs;
    for (LanguageTag l : seq.langs) langs.emplace_back(ToString(l));
    py::dict d;
    d["ids"] = seq.ids;
    d["texts"] = seq.texts;
    d["langs"] = langs;
    return d;
  }

  std::unique_ptr<TokenizerBundle> bundle_;
};

py::dict AlignmentDict(const AlignmentResult& r) {
  py::dict d;
  d["substitutions"] = r.substitutions;
  d["deletions"] = r.deletions;
  d["insertions"] = r.insertions;
  d["hits"] = r.hits;
  d["ref_len"] = r.ref_len;
  d["errors"] = r.errors();
  d["rate"] = r.rate();
  return d;
}

Normalization Norm(bool normalize) {
  return normalize ? Normalization{} : Normalization{false, false};
}

}  // namespace
}  // namespace romantok

PYBIND11_MODULE(_core, m) {
  using namespace romantok;
  m.doc() = "Romanization-based tokenization for code-switching ASR";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<UnknownGraphemeError> grapheme_error(
      m, "UnknownGraphemeError", error.ptr());
  static py::exception<InvalidArgumentError> invalid_error(
      m, "InvalidArgumentError", PyExc_ValueError);
  static py::exception<UnsupportedLanguageError> language_error(
      m, "UnsupportedLanguageError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const UnknownGraphemeError& e) {
      py::set_error(grapheme_error, e.what());
    } catch (const InvalidArgumentError& e) {
      py::set_error(invalid_error, e.what());
    } catch (const UnsupportedLanguageError& e) {
      py::set_error(language_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  // Lexicons.
  py::class_<Lexicon>(m, "Lexicon")
      .def_property_readonly("language",
                             [](const Lexicon& l) { return std::string(ToString(l.language())); })
      .def_property_readonly("char_vocab_size", &Lexicon::CharVocabSize)
      .def_property_readonly("roman_vocab_size", &Lexicon::RomanVocabSize)
      .def_property_readonly("polyphone_count", &Lexicon::PolyphoneCount)
      .def("readings",
           [](const Lexicon& l, const std::string& surface) {
             std::vector<std::pair<std::string, double>> out;
             if (const LexiconEntry* e = l.Find(surface)) {
               for (const auto& r : e->readings) out.emplace_back(r.roman, r.weight);
             }
             return out;
           },
           py::arg("surface"))
      .def("__len__", &Lexicon::CharVocabSize);
  m.def("load_lexicon",
        [](const std::string& path, const std::string& lang) {
          return LoadLexicon(path, Lang(lang));
        },
        py::arg("path"), py::arg("lang"));
  m.def("vocab_reduction_percent", &VocabReductionPercent, py::arg("chars"),
        py::arg("romans"));

  // Romanization.
  m.def("romanize",
        [](const std::string& text, const std::string& lang, const Lexicon* lexicon) {
          const LanguageTag tag = Lang(lang);
          LexiconSet set;
          if (tag == LanguageTag::kZh) set.zh = lexicon;
          if (tag == LanguageTag::kJa) set.ja = lexicon;
          return Texts(Romanize(NormalizeNfc(text), tag, set));
        },
        py::arg("text"), py::arg("lang"), py::arg("lexicon") = nullptr);
  m.def("romanize_mixed",
        [](const std::string& text, const Lexicon* zh, const Lexicon* ja,
           bool han_as_japanese) {
          return RomanizeMixed(NormalizeNfc(text), MakeSet(zh, ja), han_as_japanese);
        },
        py::arg("text"), py::arg("zh_lexicon") = nullptr,
        py::arg("ja_lexicon") = nullptr, py::arg("han_as_japanese") = false);
  m.def("romanize_ko_syllable",
        [](const std::string& syllable) {
          const std::u32string cps = DecodeUtf8(NormalizeNfc(syllable));
          if (cps.size() != 1) throw InvalidArgumentError("expected one syllable");
          return RomanizeKoSyllable(cps[0]);
        },
        py::arg("syllable"));
  m.def("deromanize_ko",
        [](const std::vector<std::string>& romans) {
          std::vector<RomanToken> tokens;
          for (const auto& r : romans) tokens.push_back({r, LanguageTag::kKo, std::nullopt});
          return DeromanizeKo(tokens);
        },
        py::arg("romans"));

  // BPE.
  py::class_<BpeModel>(m, "BpeModel")
      .def_static("load", &BpeModel::LoadFile, py::arg("path"))
      .def("save", &BpeModel::SaveFile, py::arg("path"))
      .def("encode", &BpeModel::Encode, py::arg("text"))
      .def("encode_to_pieces", &BpeModel::EncodeToPieces, py::arg("text"))
      .def("decode",
           [](const BpeModel& b, const std::vector<int>& ids) { return b.Decode(ids); },
           py::arg("ids"))
      .def_property_readonly("tokens", &BpeModel::tokens)
      .def_property_readonly("merges", &BpeModel::merges)
      .def("__len__", &BpeModel::size);
  m.def("train_bpe",
        [](const std::vector<std::string>& lines, std::size_t vocab) {
          return TrainBpe(lines, vocab);
        },
        py::arg("lines"), py::arg("vocab_size") = 1024);

  // Concatenated tokenizer.
  py::class_<PyTokenizer>(m, "Tokenizer")
      .def(py::init<const std::string&>(), py::arg("manifest"))
      .def("encode", &PyTokenizer::Encode, py::arg("text"))
      .def("decode", &PyTokenizer::Decode, py::arg("ids"))
      .def("decode_text", &PyTokenizer::DecodeText, py::arg("ids"))
      .def("lid", &PyTokenizer::Lid, py::arg("id"))
      .def_property_readonly("partitions", &PyTokenizer::Partitions)
      .def("__len__", &PyTokenizer::size);

  // Character n-gram and R2C.
  py::class_<CharNGramModel>(m, "CharNGramModel")
      .def_static("load", &CharNGramModel::LoadFile, py::arg("path"))
      .def("save", &CharNGramModel::SaveFile, py::arg("path"))
      .def_property_readonly("order", &CharNGramModel::order)
      .def("prob",
           [](const CharNGramModel& model, const std::string& c,
              const std::string& history) {
             const std::u32string cps = DecodeUtf8(c);
             if (cps.size() != 1) throw InvalidArgumentError("expected one character");
             return model.Prob(cps[0], DecodeUtf8(history));
           },
           py::arg("char"), py::arg("history") = "");
  m.def("train_char_ngram",
        [](const std::vector<std::string>& lines, int order, double floor) {
          return TrainCharNGram(lines, order, floor);
        },
        py::arg("lines"), py::arg("order") = 3,
        py::arg("floor") = CharNGramModel::kDefaultFloor);

  py::class_<R2CDecoder>(m, "R2CDecoder")
      .def(py::init<double>(), py::arg("alpha") = 1.0)
      .def("add_language",
           [](R2CDecoder& d, const std::string& lang, const Lexicon& lexicon,
              const CharNGramModel& model) {
             const LanguageTag tag = Lang(lang);
             d.AddLanguage(tag,
                           Reverse(tag == LanguageTag::kJa
                                       ? MergeLexicons(KanaLexicon(), lexicon)
                                       : lexicon),
                           model);
           },
           py::arg("lang"), py::arg("lexicon"), py::arg("model"))
      .def("decode_run",
           [](const R2CDecoder& d, const std::string& lang,
              const std::vector<std::string>& texts) {
             return d.DecodeRun(Lang(lang), texts);
           },
           py::arg("lang"), py::arg("texts"))
      .def("decode_ids",
           [](const R2CDecoder& d, const PyTokenizer& tok, const std::vector<int>& ids) {
             return d.Decode(tok.bundle().tokenizer->Decode(ids));
           },
           py::arg("tokenizer"), py::arg("ids"));

  // Metrics.
  m.def("edit_align",
        [](const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
          return AlignmentDict(EditAlign(ref, hyp));
        },
        py::arg("ref"), py::arg("hyp"));
  m.def("mixed_tokenize",
        [](const std::string& text, bool normalize) {
          return MixedTokenize(text, Norm(normalize));
        },
        py::arg("text"), py::arg("normalize") = true);
  m.def("score",
        [](const std::string& metric, const std::string& ref, const std::string& hyp,
           bool normalize) {
          return AlignmentDict(Score(ParseMetric(metric), ref, hyp, Norm(normalize)));
        },
        py::arg("metric"), py::arg("ref"), py::arg("hyp"), py::arg("normalize") = true);
  m.def("score_corpus",
        [](const std::string& metric, const std::vector<std::string>& refs,
           const std::vector<std::string>& hyps, bool normalize) {
          return AlignmentDict(ScoreCorpus(ParseMetric(metric), refs, hyps, Norm(normalize)));
        },
        py::arg("metric"), py::arg("refs"), py::arg("hyps"),
        py::arg("normalize") = true);

  // Corpus accounting.
  m.def("classify",
        [](const std::string& text) { return std::string(ToString(Classify(text))); },
        py::arg("text"));
  py::class_<Manifest>(m, "Manifest")
      .def(py::init<>())
      .def("add",
           [](Manifest& mf, const std::string& id, double duration, const std::string& text) {
             mf.Add(id, duration, text);
           },
           py::arg("id"), py::arg("duration"), py::arg("text"))
      .def_property_readonly("total_duration", &Manifest::total_duration)
      .def_property_readonly("ids",
                             [](const Manifest& mf) {
                               std::vector<std::string> ids;
                               for (const auto& r : mf.records()) ids.push_back(r.id);
                               return ids;
                             })
      .def("__len__", &Manifest::size);
  m.def("load_manifest", &LoadManifest, py::arg("path"));
  m.def("composition",
        [](const Manifest& mf) {
          const CompositionStats s = ComputeComposition(mf);
          py::dict d;
          d["hours"] = s.total_seconds / 3600.0;
          d["ZH"] = s.zh_percent;
          d["EN"] = s.en_percent;
          d["CS"] = s.cs_percent;
          return d;
        },
        py::arg("manifest"));
  m.def("balance",
        [](const std::vector<const Manifest*>& manifests,
           const std::vector<double>& target_hours, std::uint64_t seed) {
          if (manifests.size() != target_hours.size()) {
            throw InvalidArgumentError("one target per manifest");
          }
          std::vector<BalanceRequest> requests;
          for (std::size_t i = 0; i < manifests.size(); ++i) {
            requests.push_back({manifests[i], target_hours[i]});
          }
          return Balance(requests, seed);
        },
        py::arg("manifests"), py::arg("target_hours"), py::arg("seed"));
}

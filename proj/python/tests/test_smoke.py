# Copyright (c) 2026 The romantok Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib

import pytest

import romantok

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def zh():
    return romantok.load_lexicon(str(DATA / "zh_lexicon.tsv"), "zh")


@pytest.fixture(scope="module")
def ja():
    return romantok.load_lexicon(str(DATA / "ja_lexicon.tsv"), "ja")


@pytest.fixture(scope="module")
def en_lines():
    return (DATA / "en_sample.txt").read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="module")
def zh_lines():
    return (DATA / "zh_corpus.txt").read_text(encoding="utf-8").splitlines()


def test_table1_rows(zh, ja):
    assert romantok.romanize("差不多", "zh", zh) == ["cha4", "bu4", "duo1"]
    assert romantok.romanize("안녕하세요", "ko") == ["an", "nyeong", "ha", "se", "yo"]
    assert romantok.romanize("かな漢字", "ja", ja) == ["ka", "na", "kan", "ji"]
    assert romantok.romanize_mixed("差不多 ten minutes", zh) == "cha4 bu4 duo1 ten minutes"


def test_errors(zh):
    with pytest.raises(romantok.UnknownGraphemeError):
        romantok.romanize("差!", "zh", zh)
    with pytest.raises(romantok.UnsupportedLanguageError):
        romantok.romanize("ten", "en")
    with pytest.raises(romantok.ParseError):
        romantok.load_lexicon(str(DATA / "en_sample.txt"), "zh")
    assert issubclass(romantok.UnknownGraphemeError, romantok.Error)


def test_korean_round_trip():
    assert romantok.romanize_ko_syllable("빨") == "ppal"
    assert romantok.deromanize_ko(["an", "nyeong"]) == "안녕"


def test_lexicon_counts(zh):
    assert zh.roman_vocab_size < zh.char_vocab_size
    assert zh.polyphone_count >= 5
    assert zh.readings("差")[0][0] == "cha4"
    assert round(romantok.vocab_reduction_percent(6202, 2263), 2) == 63.51


def make_tokenizer(tmp_path, en_lines):
    bpe = romantok.train_bpe(en_lines, 1024)
    bpe.save(str(tmp_path / "en.bpe"))

    lexicon_lines = (DATA / "zh_lexicon.tsv").read_text(encoding="utf-8").splitlines()
    romans = sorted({line.split("\t")[1] for line in lexicon_lines
                     if line and not line.startswith("#")})
    (tmp_path / "zh.vocab").write_text("<unk>\n" + "\n".join(romans) + "\n", encoding="utf-8")
    (tmp_path / "tok.tsv").write_text(
        f"en\tbpe\ten.bpe\nzh\troman\tzh.vocab\t{DATA / 'zh_lexicon.tsv'}\n", encoding="utf-8")
    return romantok.Tokenizer(str(tmp_path / "tok.tsv")), len(romans)


def test_bpe(tmp_path, en_lines):
    bpe = romantok.train_bpe(en_lines, 1024)
    assert len(bpe) == 1024
    assert bpe.decode(bpe.encode("Ten Minutes")) == "ten minutes"
    bpe.save(str(tmp_path / "en.bpe"))
    assert romantok.BpeModel.load(str(tmp_path / "en.bpe")).tokens == bpe.tokens


def test_tokenizer(tmp_path, en_lines):
    tok, n_romans = make_tokenizer(tmp_path, en_lines)
    assert tok.partitions[0] == ("en", "bpe", 0, 1024)
    assert tok.partitions[1][2:] == (1024, 1024 + n_romans + 1)
    enc = tok.encode("差不多 ten minutes")
    assert all(i >= 1024 for i in enc["ids"][:3])
    assert tok.decode_text(enc["ids"]) == "cha4 bu4 duo1 ten minutes"
    assert tok.lid(0) == "en" and tok.lid(1024) == "zh"
    with pytest.raises(romantok.Error):
        tok.decode([10**6])


def test_r2c(tmp_path, zh, en_lines, zh_lines):
    model = romantok.train_char_ngram(zh_lines, 3)
    assert model.order == 3
    assert 0.0 < model.prob("们", "我") < 1.0
    decoder = romantok.R2CDecoder()
    decoder.add_language("zh", zh, model)
    assert decoder.decode_run("zh", ["cha4", "bu4", "duo1"]) == "差不多"
    tok, _ = make_tokenizer(tmp_path, en_lines)
    ids = tok.encode("差不多 ten minutes")["ids"]
    assert decoder.decode_ids(tok, ids) == "差不多 ten minutes"


def test_metrics():
    r = romantok.score("mer", "差不多 ten minutes", "差多 ten minute")
    assert (r["errors"], r["ref_len"]) == (2, 5)
    assert r["rate"] == pytest.approx(0.4)
    assert romantok.mixed_tokenize("ok好ok") == ["ok", "好", "ok"]
    assert romantok.edit_align(["a", "b", "c"], ["a", "c"])["deletions"] == 1
    with pytest.raises(romantok.InvalidArgumentError):
        romantok.score_corpus("wer", ["a"], [])


def test_corpus():
    m = romantok.Manifest()
    m.add("a", 3.0, "我们 go")
    m.add("b", 1.0, "hello")
    comp = romantok.composition(m)
    assert comp["CS"] == pytest.approx(75.0) and comp["EN"] == pytest.approx(25.0)
    assert romantok.classify("我们") == "ZH"
    hours = m.total_duration / 3600.0
    out = romantok.balance([m], [3 * hours], seed=1)
    assert sorted(out[0].ids) == ["a"] * 3 + ["b"] * 3
    again = romantok.balance([m], [3 * hours], seed=1)
    assert out[0].ids == again[0].ids

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
"""Romanization-based tokenization for code-switching speech recognition."""

from romantok._core import (
    BpeModel,
    CharNGramModel,
    Error,
    InvalidArgumentError,
    Lexicon,
    Manifest,
    ParseError,
    R2CDecoder,
    Tokenizer,
    UnknownGraphemeError,
    UnsupportedLanguageError,
    balance,
    classify,
    composition,
    deromanize_ko,
    edit_align,
    load_lexicon,
    load_manifest,
    mixed_tokenize,
    romanize,
    romanize_ko_syllable,
    romanize_mixed,
    score,
    score_corpus,
    train_bpe,
    train_char_ngram,
    vocab_reduction_percent,
)

__version__ = "0.1.0"

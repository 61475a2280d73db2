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

#ifndef ROMANTOK_SRC_ROMANIZER_INTERNAL_H_
#define ROMANTOK_SRC_ROMANIZER_INTERNAL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "romantok/language.h"
#include "romantok/romanizer.h"

namespace romantok::internal {

struct RomanUnit {
  std::string text;    // roman, or the raw grapheme when !mapped
  std::string origin;  // source grapheme(s)
  bool mapped = true;
  std::size_t offset = 0;  // code points
};

// Shared worker behind the public romanizers. With `lenient`, graphemes
// without a romanization come back as unmapped units instead of throwing.
std::vector<RomanUnit> RomanizeUnits(std::u32string_view text,
                                     LanguageTag language,
                                     const LexiconSet& lexicons, bool lenient);

}  // namespace romantok::internal

#endif  // ROMANTOK_SRC_ROMANIZER_INTERNAL_H_

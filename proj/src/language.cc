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

#include "romantok/language.h"

#include <string>

#include "romantok/error.h"

namespace romantok {

std::string_view ToString(LanguageTag tag) {
  switch (tag) {
    case LanguageTag::kZh:
      return "zh";
    case LanguageTag::kKo:
      return "ko";
    case LanguageTag::kJa:
      return "ja";
    case LanguageTag::kEn:
      return "en";
  }
  return "?";
}

LanguageTag ParseLanguageTag(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (lower == "zh") return LanguageTag::kZh;
  if (lower == "ko") return LanguageTag::kKo;
  if (lower == "ja") return LanguageTag::kJa;
  if (lower == "en") return LanguageTag::kEn;
  throw InvalidArgumentError("unknown language tag '" + std::string(name) +
                             "'");
}

}  // namespace romantok

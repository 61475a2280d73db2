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

#ifndef ROMANTOK_LANGUAGE_H_
#define ROMANTOK_LANGUAGE_H_

#include <string_view>

namespace romantok {

enum class LanguageTag { kZh, kKo, kJa, kEn };

// "zh", "ko", "ja", "en".
std::string_view ToString(LanguageTag tag);

// Case-insensitive inverse of ToString. Throws InvalidArgumentError.
LanguageTag ParseLanguageTag(std::string_view name);

}  // namespace romantok

#endif  // ROMANTOK_LANGUAGE_H_

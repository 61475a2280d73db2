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

#ifndef ROMANTOK_SRC_TABLES_H_
#define ROMANTOK_SRC_TABLES_H_

#include <string_view>

namespace romantok::internal {

// Raw contents of data/hangul_jamo.tsv and data/kana.tsv.
std::string_view JamoTableTsv();
std::string_view KanaTableTsv();

}  // namespace romantok::internal

#endif  // ROMANTOK_SRC_TABLES_H_

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

#include "romantok/error.h"

namespace romantok {

namespace {

std::string FormatParseError(const std::string& source, std::size_t line,
                             const std::string& what) {
  if (line == 0) return source + ": " + what;
  return source + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : Error(FormatParseError(source, line, what)), line_(line) {}

UnknownGraphemeError::UnknownGraphemeError(const std::string& grapheme,
                                           std::size_t offset)
    : Error("unknown grapheme '" + grapheme + "' at offset " +
            std::to_string(offset)),
      grapheme_(grapheme),
      offset_(offset) {}

}  // namespace romantok

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

#ifndef ROMANTOK_ERROR_H_
#define ROMANTOK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace romantok {

// Base for every data-level failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied an argument outside the operation's contract
// (e.g. a target vocabulary below the character floor).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A grapheme with no romanization. offset() counts code points.
class UnknownGraphemeError : public Error {
 public:
  UnknownGraphemeError(const std::string& grapheme, std::size_t offset);
  const std::string& grapheme() const { return grapheme_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string grapheme_;
  std::size_t offset_;
};

class UnsupportedLanguageError : public Error {
 public:
  using Error::Error;
};

}  // namespace romantok

#endif  // ROMANTOK_ERROR_H_

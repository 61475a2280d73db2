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

#include "romantok/ngram.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "romantok/error.h"
#include "romantok/utf8.h"
#include "text_util.h"

namespace romantok {

namespace {

constexpr std::string_view kBosText = "<s>";
constexpr std::string_view kEosText = "</s>";

std::string SymbolText(char32_t c) {
  if (c == CharNGramModel::kBos) return std::string(kBosText);
  if (c == CharNGramModel::kEos) return std::string(kEosText);
  return EncodeUtf8(c);
}

std::string ContextText(std::u32string_view context) {
  std::string out;
  for (char32_t c : context) out += SymbolText(c);
  return out;
}

std::u32string ParseContext(std::string_view text) {
  std::u32string out;
  while (!text.empty()) {
    if (text.substr(0, kBosText.size()) == kBosText) {
      out.push_back(CharNGramModel::kBos);
      text.remove_prefix(kBosText.size());
      continue;
    }
    // Take one UTF-8 code point.
    std::size_t len = 1;
    const auto b = static_cast<unsigned char>(text[0]);
    if (b >= 0xF0) {
      len = 4;
    } else if (b >= 0xE0) {
      len = 3;
    } else if (b >= 0xC0) {
      len = 2;
    }
    out += DecodeUtf8(text.substr(0, len));
    text.remove_prefix(len);
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(std::string_view s, const std::string& source,
                   std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(source, line, "invalid number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CharNGramModel::CharNGramModel(int order, double floor, Counts counts)
    : order_(order), floor_(floor), counts_(std::move(counts)) {
  if (order_ < 1 || order_ > 5) {
    throw InvalidArgumentError("n-gram order must be in [1, 5], got " +
                               std::to_string(order_));
  }
  if (!(floor_ > 0.0 && floor_ < 1.0)) {
    throw InvalidArgumentError("n-gram floor must be in (0, 1)");
  }
  double sum = 0.0;
  for (int k = 1; k <= order_; ++k) {
    lambdas_.push_back(std::ldexp(1.0, k - 1));
    sum += lambdas_.back();
  }
  for (double& l : lambdas_) l /= sum;
  for (const auto& [context, next] : counts_) {
    if (static_cast<int>(context.size()) >= order_) {
      throw InvalidArgumentError("context longer than order - 1");
    }
    ContextStats& stats = index_[context];
    for (const auto& [c, n] : next) {
      if (n <= 0) throw InvalidArgumentError("non-positive n-gram count");
      stats.total += n;
      stats.next[c] += n;
      if (c != kEos && c != kBos) vocab_[c] = true;
    }
  }
  if (!index_.contains(std::u32string())) {
    throw InvalidArgumentError("n-gram model has no unigram counts");
  }
}

std::u32string CharNGramModel::StartContext() const {
  return std::u32string(static_cast<std::size_t>(order_ - 1), kBos);
}

double CharNGramModel::Prob(char32_t c, std::u32string_view history) const {
  double mixed = 0.0;
  double mass = 0.0;
  for (int k = 1; k <= order_; ++k) {
    const std::size_t len = static_cast<std::size_t>(k - 1);
    if (history.size() < len) break;
    auto it = index_.find(std::u32string(history.substr(history.size() - len)));
    if (it == index_.end()) continue;
    const double lambda = lambdas_[k - 1];
    mass += lambda;
    auto next = it->second.next.find(c);
    if (next != it->second.next.end()) {
      mixed += lambda * static_cast<double>(next->second) /
               static_cast<double>(it->second.total);
    }
  }
  const double ml = mass > 0.0 ? mixed / mass : 0.0;
  const double uniform = 1.0 / static_cast<double>(vocab_.size() + 2);
  return (1.0 - floor_) * ml + floor_ * uniform;
}

double CharNGramModel::LogProb(char32_t c, std::u32string_view history) const {
  return std::log(Prob(c, history));
}

void CharNGramModel::Save(std::ostream& out) const {
  out << "#order\t" << order_ << '\n';
  out << "#lambdas";
  for (double l : lambdas_) out << '\t' << FormatDouble(l);
  out << '\n';
  out << "#floor\t" << FormatDouble(floor_) << '\n';
  out << "#vocab\t" << vocab_.size() << '\n';
  for (const auto& [context, next] : counts_) {
    const std::string ctx = ContextText(context);
    for (const auto& [c, n] : next) {
      out << ctx << '\t' << SymbolText(c) << '\t' << n << '\n';
    }
  }
}

void CharNGramModel::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write n-gram model '" + path + "'");
  Save(out);
}

CharNGramModel CharNGramModel::Load(std::istream& in,
                                    const std::string& source) {
  int order = 0;
  double floor = kDefaultFloor;
  long vocab = -1;
  Counts counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = internal::Split(line, '\t');
    if (f[0] == "#order" && f.size() == 2) {
      order = static_cast<int>(ParseDouble(f[1], source, line_no));
      continue;
    }
    if (f[0] == "#lambdas") continue;  // derived from the order
    if (f[0] == "#floor" && f.size() == 2) {
      floor = ParseDouble(f[1], source, line_no);
      continue;
    }
    if (f[0] == "#vocab" && f.size() == 2) {
      vocab = static_cast<long>(ParseDouble(f[1], source, line_no));
      continue;
    }
    if (f.size() != 3) {
      throw ParseError(source, line_no, "expected context<TAB>char<TAB>count");
    }
    char32_t c = 0;
    if (f[1] == kEosText) {
      c = kEos;
    } else {
      const std::u32string cs = DecodeUtf8(f[1]);
      if (cs.size() != 1) throw ParseError(source, line_no, "bad character");
      c = cs[0];
    }
    const double n = ParseDouble(f[2], source, line_no);
    try {
      counts[ParseContext(f[0])][c] += static_cast<std::int64_t>(n);
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (order == 0) throw ParseError(source, 0, "missing #order header");
  try {
    CharNGramModel model(order, floor, std::move(counts));
    if (vocab >= 0 && static_cast<std::size_t>(vocab) != model.vocab_size()) {
      throw ParseError(source, 0, "#vocab does not match the counts");
    }
    return model;
  } catch (const InvalidArgumentError& e) {
    throw ParseError(source, 0, e.what());
  }
}

CharNGramModel CharNGramModel::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open n-gram model '" + path + "'");
  return Load(in, path);
}

CharNGramModel TrainCharNGram(std::span<const std::string> lines, int order,
                              double floor) {
  if (order < 1 || order > 5) {
    throw InvalidArgumentError("n-gram order must be in [1, 5], got " +
                               std::to_string(order));
  }
  CharNGramModel::Counts counts;
  std::size_t sentences = 0;
  for (const std::string& line : lines) {
    std::u32string seq(static_cast<std::size_t>(order - 1),
                       CharNGramModel::kBos);
    for (char32_t c : DecodeUtf8(line)) {
      if (ClassifyCodePoint(c) == Script::kSpace) continue;
      if (c == CharNGramModel::kBos || c == CharNGramModel::kEos) {
        throw InvalidArgumentError("corpus contains a reserved control character");
      }
      seq.push_back(c);
    }
    if (seq.size() == static_cast<std::size_t>(order - 1)) continue;
    seq.push_back(CharNGramModel::kEos);
    ++sentences;
    for (std::size_t i = static_cast<std::size_t>(order - 1); i < seq.size();
         ++i) {
      for (int k = 1; k <= order; ++k) {
        const std::size_t len = static_cast<std::size_t>(k - 1);
        ++counts[seq.substr(i - len, len)][seq[i]];
      }
    }
  }
  if (sentences == 0) throw InvalidArgumentError("n-gram corpus is empty");
  return CharNGramModel(order, floor, std::move(counts));
}

}  // namespace romantok

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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <doctest.h>

#include "romantok/corpus.h"
#include "romantok/error.h"

namespace romantok {
namespace {

Manifest MakeManifest(const std::vector<std::pair<double, std::string>>& rows,
                      const std::string& prefix = "u") {
  Manifest m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.Add(prefix + std::to_string(i), rows[i].first, rows[i].second);
  }
  return m;
}

std::map<std::string, int> IdCounts(const Manifest& m) {
  std::map<std::string, int> out;
  for (const auto& r : m.records()) ++out[r.id];
  return out;
}

TEST_SUITE("corpus") {
  TEST_CASE("classification by script") {
    CHECK(Classify("我们走吧") == UtteranceClass::kZh);
    CHECK(Classify("let's go") == UtteranceClass::kEn);
    CHECK(Classify("我们 go 吧") == UtteranceClass::kCs);
    CHECK_THROWS_AS(Classify("..."), InvalidArgumentError);
    CHECK(ToString(UtteranceClass::kCs) == "CS");
  }

  TEST_CASE("composition is by duration") {
    const Manifest m = MakeManifest({{3.0, "我们 go"}, {1.0, "hello"}});
    const CompositionStats s = ComputeComposition(m);
    CHECK(s.total_seconds == 4.0);
    CHECK(s.cs_percent == doctest::Approx(75.0));
    CHECK(s.en_percent == doctest::Approx(25.0));
    CHECK(s.zh_percent == 0.0);
    const std::vector<std::string> names = {"train"};
    const std::vector<CompositionStats> stats = {s};
    const std::string table = FormatCompositionTable(names, stats);
    CHECK(table.find("train") != std::string::npos);
    CHECK(table.find("75.0") != std::string::npos);
  }

  TEST_CASE("manifest parsing") {
    std::istringstream in(
        "{\"id\": \"a\", \"duration\": 1.5, \"text\": \"我们\"}\n\n"
        "{\"id\": \"b\", \"duration\": 2, \"text\": \"hi\"}\n");
    const Manifest m = ParseManifest(in);
    REQUIRE(m.size() == 2);
    CHECK(m.records()[0].cls == UtteranceClass::kZh);
    CHECK(m.total_duration() == 3.5);
    CHECK(m.MaxDuration() == 2.0);
    std::ostringstream out;
    WriteManifest(out, m);
    std::istringstream again(out.str());
    CHECK(ParseManifest(again).records() == m.records());

    std::istringstream bad_json("{\"id\": \"a\"\n");
    CHECK_THROWS_AS(ParseManifest(bad_json), ParseError);
    std::istringstream missing("{\"id\": \"a\", \"text\": \"x\"}\n");
    CHECK_THROWS_AS(ParseManifest(missing), ParseError);
    std::istringstream zero("{\"id\": \"a\", \"duration\": 0, \"text\": \"x\"}\n");
    CHECK_THROWS_AS(ParseManifest(zero), ParseError);
  }

  TEST_CASE("integer upsample copies every utterance") {
    const Manifest m = MakeManifest({{3600.0, "a"}, {7200.0, "我们"}});
    const BalanceRequest req{&m, 9.0};
    const auto out = Balance(std::span(&req, 1), 42);
    REQUIRE(out.size() == 1);
    CHECK(out[0].size() == 6);
    for (const auto& [id, n] : IdCounts(out[0])) CHECK(n == 3);
    CHECK(out[0].total_duration() == doctest::Approx(9 * 3600.0));
  }

  TEST_CASE("balancing is seeded and lands near the target") {
    std::vector<std::pair<double, std::string>> rows;
    for (int i = 0; i < 40; ++i) rows.push_back({1.0 + (i % 7) * 0.5, "go"});
    const Manifest m = MakeManifest(rows);
    const double total_h = m.total_duration() / 3600.0;
    for (double factor : {0.3, 1.0, 2.6}) {
      const BalanceRequest req{&m, total_h * factor};
      const auto a = Balance(std::span(&req, 1), 5);
      const auto b = Balance(std::span(&req, 1), 5);
      CHECK(a[0].records() == b[0].records());
      const double got = a[0].total_duration();
      const double target = req.target_hours * 3600.0;
      CHECK(std::abs(got - target) <= m.MaxDuration() + 1e-9);
    }
    const BalanceRequest neg{&m, -1.0};
    CHECK_THROWS_AS(Balance(std::span(&neg, 1), 1), InvalidArgumentError);
  }

  TEST_CASE("vocabulary reduction") {
    CHECK(VocabReductionPercent(6202, 2263) == doctest::Approx(63.5118).epsilon(1e-4));
    std::istringstream in("是\tshi4\n事\tshi4\n我\two3\n");
    const Lexicon lex = ParseLexicon(in, LanguageTag::kZh);
    const std::vector<std::string> lines = {"是事我 ok", "好"};
    const VocabStats s = ComputeVocabStats(lines, lex);
    CHECK(s.chars == 3);
    CHECK(s.romans == 2);
    CHECK(s.unknown == 1);
    CHECK(s.reduction_percent() == doctest::Approx(100.0 / 3));
  }
}

}  // namespace
}  // namespace romantok

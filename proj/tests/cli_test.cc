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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out, err;
};

const fs::path& WorkDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "romantok_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

Run Cli(const std::string& args, const std::string& stdin_text = "") {
  const fs::path in = WorkDir() / "stdin.txt";
  const fs::path out = WorkDir() / "stdout.txt";
  const fs::path err = WorkDir() / "stderr.txt";
  Write(in, stdin_text);
  const std::string cmd = std::string("'") + ROMANTOK_CLI + "' " + args + " < '" +
                          in.string() + "' > '" + out.string() + "' 2> '" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = Slurp(out);
  r.err = Slurp(err);
  return r;
}

std::string Data(const std::string& name) {
  return std::string(ROMANTOK_DATA_DIR) + "/" + name;
}

std::string Tmp(const std::string& name) { return (WorkDir() / name).string(); }

TEST_SUITE("cli") {
  TEST_CASE("help and usage errors") {
    CHECK(Cli("--help").code == 0);
    CHECK(Cli("romanize --help").code == 0);
    CHECK(Cli("--no-such-flag").code == 1);
    CHECK(Cli("romanize --lang xx").code == 1);
    CHECK(Cli("").code == 1);
  }

  TEST_CASE("romanize") {
    const std::string zh = "romanize --lang zh --lexicon " + Data("zh_lexicon.tsv");
    Run r = Cli(zh, "差不多\n");
    CHECK(r.code == 0);
    CHECK(r.out == "cha4 bu4 duo1\n");
    CHECK(r.err.empty());
    r = Cli(zh, "");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    r = Cli(zh, "差不多\n差?\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("差?") != std::string::npos);
    CHECK(Cli("romanize --lang ko", "안녕하세요\n").out == "an nyeong ha se yo\n");
    CHECK(Cli("romanize --lang ja --lexicon " + Data("ja_lexicon.tsv"), "かな漢字\n").out ==
          "ka na kan ji\n");
    CHECK(Cli("romanize --lang mixed --zh-lexicon " + Data("zh_lexicon.tsv"),
              "差不多 ten minutes\n")
              .out == "cha4 bu4 duo1 ten minutes\n");
    CHECK(Cli("romanize --lang zh").code == 1);
  }

  TEST_CASE("train, tokenize, detokenize, r2c") {
    Run r = Cli("bpe-train --corpus " + Data("en_sample.txt") +
                " --vocab 1024 --output " + Tmp("en.bpe"));
    REQUIRE(r.code == 0);
    const std::string first = Slurp(Tmp("en.bpe"));
    REQUIRE(Cli("bpe-train --corpus " + Data("en_sample.txt") +
                " --vocab 1024 --output " + Tmp("en2.bpe"))
                .code == 0);
    CHECK(Slurp(Tmp("en2.bpe")) == first);
    CHECK(Cli("bpe-train --corpus " + Data("en_sample.txt") + " --vocab 3").code == 1);

    REQUIRE(Cli("ngram-train --corpus " + Data("zh_corpus.txt") +
                " --order 3 --output " + Tmp("zh.ngram"))
                .code == 0);
    REQUIRE(Cli("build-vocab --lang zh --kind roman --lexicon " +
                Data("zh_lexicon.tsv") + " --output " + Tmp("zh.vocab"))
                .code == 0);
    Write(Tmp("tok.tsv"), "en\tbpe\ten.bpe\nzh\troman\tzh.vocab\t" +
                              Data("zh_lexicon.tsv") + "\n");
    r = Cli("tokenize --tokenizer " + Tmp("tok.tsv"), "差不多 ten minutes\n");
    REQUIRE(r.code == 0);
    std::istringstream ids(r.out);
    int id = 0, count = 0;
    while (ids >> id) {
      if (count++ < 3) CHECK(id >= 1024);
      else CHECK(id < 1024);
    }
    const std::string id_line = r.out;
    r = Cli("detokenize --tokenizer " + Tmp("tok.tsv"), id_line);
    CHECK(r.out == "cha4 bu4 duo1 ten minutes\n");
    CHECK(Cli("detokenize --tokenizer " + Tmp("tok.tsv"), "99999\n").code == 2);

    const std::string r2c = "r2c --rev-lexicon " + Data("zh_lexicon.tsv") +
                            " --ngram " + Tmp("zh.ngram");
    r = Cli(r2c, "cha4 bu4 duo1 ten minutes\n");
    CHECK(r.code == 0);
    CHECK(r.out == "差不多 ten minutes\n");
    CHECK(Cli(r2c, "hello there\n").out == "hello there\n");
    Write(Tmp("ids.txt"), id_line);
    CHECK(Cli(r2c + " --ids --tokenizer " + Tmp("tok.tsv") + " --input " + Tmp("ids.txt"))
              .out == "差不多 ten minutes\n");
    CHECK(Cli("r2c --rev-lexicon " + Data("zh_lexicon.tsv")).code == 1);

    Write(Tmp("pipe.cfg"), "tokenizer = tok.tsv\nngram = zh.ngram\ninput = " +
                               Data("zh_corpus.txt") + "\nmetric = cer\n");
    r = Cli("pipeline --config " + Tmp("pipe.cfg"));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("CER ", 0) == 0);
  }

  TEST_CASE("score") {
    Write(Tmp("ref.txt"), "差不多 ten minutes\nhello\n");
    Write(Tmp("hyp.txt"), "差多 ten minute\nhello\n");
    Run r = Cli("score --metric mer " + Tmp("ref.txt") + " " + Tmp("ref.txt"));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("MER 0.00 ", 0) == 0);
    r = Cli("score --metric mer " + Tmp("ref.txt") + " " + Tmp("hyp.txt"));
    CHECK(r.out.rfind("MER 33.33 S=1 D=1 I=0 N=6", 0) == 0);
    Write(Tmp("ref.tsv"), "a\t差不多 ten minutes\n");
    Write(Tmp("hyp.tsv"), "a\t差多 ten minute\n");
    r = Cli("score --tsv --metric mer " + Tmp("ref.tsv") + " " + Tmp("hyp.tsv"));
    CHECK(r.out.rfind("MER 40.00 ", 0) == 0);
    Write(Tmp("short.tsv"), "a\tx\nb\ty\n");
    CHECK(Cli("score --tsv " + Tmp("ref.tsv") + " " + Tmp("short.tsv")).code == 2);
    CHECK(Cli("score --metric bleu " + Tmp("ref.txt") + " " + Tmp("hyp.txt")).code == 1);
  }

  TEST_CASE("stats and balance") {
    Write(Tmp("m.jsonl"),
          "{\"id\":\"a\",\"duration\":3,\"text\":\"我们 go\"}\n"
          "{\"id\":\"b\",\"duration\":1,\"text\":\"hello\"}\n");
    Run r = Cli("stats --mode composition --manifest " + Tmp("m.jsonl"));
    CHECK(r.code == 0);
    CHECK(r.out.find("75.0") != std::string::npos);
    CHECK(r.out.find("25.0") != std::string::npos);
    r = Cli("stats --mode vocab --corpus " + Data("zh_corpus.txt") + " --lexicon " +
            Data("zh_lexicon.tsv"));
    CHECK(r.code == 0);
    CHECK(r.out.find("reduction(%)") != std::string::npos);

    const std::string hours = std::to_string(4.0 * 3 / 3600.0);
    r = Cli("balance --manifest " + Tmp("m.jsonl") + " --target-hours " + hours +
            " --seed 3");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    CHECK(Cli("balance --manifest " + Tmp("m.jsonl") + " --target-hours " + hours +
              " --seed 3")
              .out == r.out);
    CHECK(Cli("balance --manifest " + Tmp("m.jsonl") + " --target-hours -1 --seed 3")
              .code == 1);
    CHECK(Cli("balance --manifest " + Tmp("m.jsonl") + " --target-hours 1").code == 1);
  }
}

}  // namespace

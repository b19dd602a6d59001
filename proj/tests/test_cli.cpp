// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli_runner.hpp"
#include "lcfk/cli.hpp"
#include "lcfk/symbols.hpp"
#include "lcfk/oracle.hpp"
#include "support.hpp"

using namespace lcfk;
using lcfk::testing::random_string;
using lcfk::testing::run_cli;
using lcfk::testing::TempDir;

TEST_CASE("find on the worked example") {
  TempDir dir;
  const auto x = dir.write("x.txt", "bbaaabb\n");
  const auto y = dir.write("y.txt", "abababa\n");
  const auto r = run_cli("find --k 1 --min-len 5 " + x + " " + y);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"status\":\"found\",\"length\":5,\"x_start\":1,\"x_end\":6,\"y_start\":1,\"y_end\":6,"
        "\"mismatches\":[2],\"k\":1,\"min_len\":5}\n");
}

TEST_CASE("no match") {
  TempDir dir;
  const auto x = dir.write("x.txt", "ab");
  const auto r = run_cli("find --k 0 --min-len 3 " + x + " " + x);
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "none");
  CHECK(j["length"].is_null());
  CHECK(j["x_start"].is_null());
  CHECK(j["mismatches"].empty());
}

TEST_CASE("stdin, FASTA and TSV") {
  TempDir dir;
  const auto both = dir.write("both.txt", "bbaaabb\r\nabababa\r\n");
  auto r = run_cli("find --k 1 --min-len 5 --format tsv < " + both);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "status\tlength\tx_start\tx_end\ty_start\ty_end\tmismatches\tk\tmin_len\n"
        "found\t5\t1\t6\t1\t6\t2\t1\t5\n");

  const auto fx = dir.write("x.fa", ">x some description\nbbaa\nabb\n");
  const auto fy = dir.write("y.fa", ">y\nababa\nba\n");
  r = run_cli("find --k 1 --min-len 5 --input-format fasta " + fx + " " + fy);
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["length"] == 5);

  const auto fboth = dir.write("both.fa", ">x\nbbaaabb\n>y\nabababa\n");
  r = run_cli("find --k 1 --min-len 5 --input-format fasta < " + fboth);
  CHECK(nlohmann::json::parse(r.out)["length"] == 5);

  const auto raw_y = dir.write("y.txt", "abababa");
  r = run_cli("oracle --k 1 --format tsv - " + raw_y + " < " + dir.write("x.txt", "bbaaabb"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("found\t5\t1\t6\t1\t6\t2\t1\t1\n") != std::string::npos);
}

TEST_CASE("errors exit with status 2") {
  TempDir dir;
  const auto good = dir.write("good.txt", "abc");
  CHECK(run_cli("find " + dir.path("missing.txt") + " " + good).exit_code == 2);
  CHECK(run_cli("find --input-format fasta " + dir.write("bad.fa", "acgt\n>x\nac\n") + " " + good).exit_code == 2);
  CHECK(run_cli("find --input-format fasta " + dir.write("multi.fa", ">a\nac\n>b\ngt\n") + " " + good).exit_code ==
        2);
  CHECK(run_cli("find " + dir.write("dollar.txt", "ab$c") + " " + good).exit_code == 2);
  CHECK(run_cli("find --min-len 0 " + good + " " + good).exit_code == 2);
  CHECK(run_cli("find --k -1 " + good + " " + good).exit_code == 2);
  CHECK(run_cli("find --format xml " + good + " " + good).exit_code == 2);
  CHECK(run_cli("find " + good).exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("oracle --max-cells 4 " + good + " " + good).exit_code == 2);
}

TEST_CASE("oracle and find agree") {
  TempDir dir;
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 12; ++trial) {
    const auto x = dir.write("x.txt", random_string(rng, 100, trial % 2 ? 2 : 4));
    const auto y = dir.write("y.txt", random_string(rng, 100, trial % 2 ? 2 : 4));
    const auto a = run_cli("find --k 2 --min-len 4 " + x + " " + y);
    const auto b = run_cli("oracle --k 2 --min-len 4 " + x + " " + y);
    CHECK(a.exit_code == b.exit_code);
    CHECK(nlohmann::json::parse(a.out)["length"] == nlohmann::json::parse(b.out)["length"]);
  }
}

TEST_CASE("output is deterministic; timing is opt-in") {
  TempDir dir;
  std::mt19937_64 rng(83);
  const auto x = dir.write("x.txt", random_string(rng, 2000, 4));
  const auto y = dir.write("y.txt", random_string(rng, 2000, 4));
  const auto a = run_cli("find --k 2 --min-len 8 " + x + " " + y);
  const auto b = run_cli("find --k 2 --min-len 8 --threads 3 " + x + " " + y);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  const auto t = run_cli("find --k 2 --min-len 8 --timing " + x + " " + y);
  CHECK(nlohmann::json::parse(t.out).contains("elapsed_ms"));
}

TEST_CASE("selftest and bench") {
  const auto s = run_cli("selftest");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
  const auto b = run_cli("bench --start 500 --max-n 1000");
  CHECK(b.exit_code == 0);
  CHECK(b.out.rfind("n\tmin_len", 0) == 0);
}

TEST_CASE("in-process entry points") {
  cli::RunConfig config;
  config.command = cli::Command::Find;
  config.k = 1;
  config.min_len = 5;
  std::istringstream in("bbaaabb\nabababa\n");
  std::ostringstream out, err;
  CHECK(cli::run(config, in, out, err) == cli::kExitFound);
  CHECK(nlohmann::json::parse(out.str())["length"] == 5);

  std::istringstream one_line("abc\n");
  CHECK_THROWS_AS(cli::read_inputs(config, one_line), InputError);
  std::istringstream blank_lines("\nabc\n\nxyz\n");
  CHECK(cli::read_inputs(config, blank_lines) == std::pair<std::string, std::string>{"abc", "xyz"});
}

// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcfk::cli {

enum class Command { Find, Oracle, Selftest, Bench };
enum class InputFormat { Raw, Fasta };
enum class OutputFormat { Json, Tsv };

struct RunConfig {
  Command command = Command::Find;
  int k = 0;
  std::uint32_t min_len = 1;
  std::vector<std::string> inputs;  // zero or two paths; "-" reads stdin
  InputFormat input_format = InputFormat::Raw;
  OutputFormat output_format = OutputFormat::Json;
  std::optional<unsigned> threads;  // falls back to LCFK_THREADS, then 1
  bool timing = false;              // append elapsed_ms to records
  std::uint64_t max_cells = 400'000'000;  // oracle guard on |X| * |Y|

  // bench
  std::uint32_t bench_start = 1000;
  std::uint32_t bench_max = 64000;
  int bench_sigma = 4;
  std::uint64_t seed = 1;
};

inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitUsage = 2;

/// Executes a parsed configuration. Exit codes: 0 found (or selftest/bench
/// success), 1 none (or a failed selftest case), 2 usage or input error.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors are reported on `err` with exit code 2.
int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Reads the two input sequences named by the config.
std::pair<std::string, std::string> read_inputs(const RunConfig& config, std::istream& in);

}  // namespace lcfk::cli

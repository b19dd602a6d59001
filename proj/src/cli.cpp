// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "lcfk/colored_trees.hpp"
#include "lcfk/difference_cover.hpp"
#include "lcfk/errata_trie.hpp"
#include "lcfk/lcf.hpp"
#include "lcfk/oracle.hpp"

namespace lcfk::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Record {
  bool found = false;
  std::uint32_t length = 0;
  std::uint32_t x_start = 0, x_end = 0, y_start = 0, y_end = 0;
  std::vector<std::uint32_t> mismatches;
  int k = 0;
  std::uint32_t min_len = 1;
  std::optional<double> elapsed_ms;
};

void write_record(const Record& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["status"] = r.found ? "found" : "none";
    if (r.found) {
      j["length"] = r.length;
      j["x_start"] = r.x_start;
      j["x_end"] = r.x_end;
      j["y_start"] = r.y_start;
      j["y_end"] = r.y_end;
    } else {
      for (const char* key : {"length", "x_start", "x_end", "y_start", "y_end"}) j[key] = nullptr;
    }
    j["mismatches"] = r.mismatches;
    j["k"] = r.k;
    j["min_len"] = r.min_len;
    if (r.elapsed_ms) j["elapsed_ms"] = std::round(*r.elapsed_ms * 1000.0) / 1000.0;
    out << j.dump() << '\n';
    return;
  }
  out << "status\tlength\tx_start\tx_end\ty_start\ty_end\tmismatches\tk\tmin_len";
  if (r.elapsed_ms) out << "\telapsed_ms";
  out << '\n' << (r.found ? "found" : "none") << '\t';
  if (r.found) {
    out << r.length << '\t' << r.x_start << '\t' << r.x_end << '\t' << r.y_start << '\t' << r.y_end << '\t';
  } else {
    out << "\t\t\t\t\t";
  }
  for (std::size_t i = 0; i < r.mismatches.size(); ++i) out << (i ? "," : "") << r.mismatches[i];
  out << '\t' << r.k << '\t' << r.min_len;
  if (r.elapsed_ms) out << '\t' << std::fixed << std::setprecision(3) << *r.elapsed_ms;
  out << '\n';
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

std::vector<std::string> fasta_records(const std::string& text, const std::string& what) {
  std::vector<std::string> records;
  bool in_record = false;
  for (const auto& line : split_lines(text)) {
    if (!line.empty() && line[0] == '>') {
      records.emplace_back();
      in_record = true;
    } else if (!strip_spaces(line).empty()) {
      if (!in_record) throw InputError(what + ": FASTA sequence data before the first '>' header");
      records.back() += strip_spaces(line);
    }
  }
  if (records.empty()) throw InputError(what + ": no FASTA record found");
  return records;
}

std::string raw_sequence(const std::string& text) {
  std::string out;
  for (const auto& line : split_lines(text)) out += line;
  return out;
}

int parse_threads(const RunConfig& config) {
  if (config.threads) return static_cast<int>(std::max(1u, *config.threads));
  if (const char* env = std::getenv("LCFK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw InputError("LCFK_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return 1;
}

Record to_record(const MatchResult& m, const RunConfig& config) {
  Record r;
  r.found = m.status == Status::Found;
  r.length = m.length;
  r.x_start = m.x_begin;
  r.x_end = m.x_end;
  r.y_start = m.y_begin;
  r.y_end = m.y_end;
  r.mismatches = m.mismatches;
  r.k = config.k;
  r.min_len = config.min_len;
  return r;
}

int run_find(const RunConfig& config, std::istream& in, std::ostream& out) {
  const auto [x, y] = read_inputs(config, in);
  SolveOptions options;
  options.threads = static_cast<unsigned>(parse_threads(config));
  const auto start = Clock::now();
  const MatchResult m = solve(x, y, config.k, config.min_len, options);
  Record r = to_record(m, config);
  if (config.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  write_record(r, config.output_format, out);
  return r.found ? kExitFound : kExitNone;
}

int run_oracle(const RunConfig& config, std::istream& in, std::ostream& out) {
  const auto [x, y] = read_inputs(config, in);
  check_alphabet(x, "X");
  check_alphabet(y, "Y");
  if (static_cast<std::uint64_t>(x.size()) * y.size() > config.max_cells) {
    throw InputError("inputs too large for the quadratic oracle (|X|*|Y| > " + std::to_string(config.max_cells) +
                     "); raise --max-cells to force");
  }
  const auto start = Clock::now();
  const auto o = oracle::lcf_k_brute(x, y, config.k);
  MatchResult m;
  if (o.length >= config.min_len) {
    m.status = Status::Found;
    m.length = o.length;
    m.x_begin = o.x_start;
    m.x_end = o.x_start + o.length;
    m.y_begin = o.y_start;
    m.y_end = o.y_start + o.length;
    for (std::uint32_t i = 0; i < o.length; ++i) {
      if (x[o.x_start + i] != y[o.y_start + i]) m.mismatches.push_back(i);
    }
  }
  Record r = to_record(m, config);
  if (config.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  write_record(r, config.output_format, out);
  return r.found ? kExitFound : kExitNone;
}

// Golden cases from the worked examples, runnable on an installed binary.
int run_selftest(std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    if (!ok) ++failures;
  };

  {
    const auto m = solve("bbaaabb", "abababa", 1, 5);
    const bool ok = m.status == Status::Found && m.length == 5 && m.mismatches.size() <= 1;
    report("lcf-example", ok,
           "length " + std::to_string(m.length) + ", X[" + std::to_string(m.x_begin) + "," + std::to_string(m.x_end) +
               ") Y[" + std::to_string(m.y_begin) + "," + std::to_string(m.y_end) + ")");
  }
  {
    const auto cover = DifferenceCover::from_residues(6, {2, 3, 5});
    const std::vector<std::uint32_t> expected{2, 3, 5, 8, 9, 11, 14, 15, 17, 20, 21, 23};
    const bool ok = cover.enumerate(24) == expected && cover.shift(3, 10) == 5;
    report("six-cover", ok, "h(3,10) = " + std::to_string(cover.shift(3, 10)));
  }
  {
    const TextIndex index("abacb", "");
    std::vector<SuffixRef> family;
    for (std::uint32_t i = 0; i < 5; ++i) family.push_back({TextId::X, i});
    const auto trie = ErrataTrie::generate(family, 1, index);
    const std::vector<std::pair<std::uint32_t, std::vector<std::string>>> table{
        {4, {"a", "b", "$"}}, {3, {"ab", "cb", "$b"}}, {2, {"abb", "acb"}}, {1, {"aacb", "bacb", "$acb"}}, {0, {"abacb"}}};
    bool ok = true;
    for (const auto& [start, strings] : table) {
      std::set<std::string> have;
      for (const auto& m : trie.members(SuffixRef{TextId::X, start})) have.insert(trie.materialize(m));
      for (const auto& s : strings) ok = ok && have.contains(s);
    }
    const auto v = trie.lcp_d({TextId::X, 2}, {TextId::X, 3}, 1);
    ok = ok && v == 1;
    report("one-complete-family", ok, "LCP_1(acb, cb) = " + std::to_string(v));
  }
  {
    using colored::Color;
    colored::Instance inst;
    auto build = [](colored::Tree& t, const std::vector<std::vector<std::pair<Color, std::uint32_t>>>& groups) {
      const std::uint32_t a = t.add_node(0, 1), b = t.add_node(0, 1);
      for (std::size_t g = 0; g < 4; ++g) {
        const std::uint32_t mid = t.add_node(g < 2 ? a : b, 2);
        for (const auto& [c, label] : groups[g]) t.add_leaf(mid, c, label, 3);
      }
    };
    build(inst.first, {{{Color::Blue, 1}, {Color::Blue, 2}},
                       {{Color::Red, 1}, {Color::Blue, 3}},
                       {{Color::Red, 2}, {Color::Red, 3}},
                       {{Color::Blue, 4}, {Color::Red, 4}}});
    build(inst.second, {{{Color::Blue, 1}, {Color::Blue, 3}},
                        {{Color::Blue, 4}, {Color::Red, 2}},
                        {{Color::Red, 1}, {Color::Red, 3}},
                        {{Color::Red, 4}, {Color::Blue, 2}}});
    const auto ans = colored::solve(inst);
    const bool ok = ans && ans->value == 3 && ans->blue_label == 4 && ans->red_label == 2;
    report("colored-trees", ok, ans ? "value " + std::to_string(ans->value) : "no answer");
  }
  {
    std::mt19937_64 rng(7);
    int mismatched = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto gen = [&](std::size_t n) {
        std::string s(n, 'a');
        for (auto& c : s) c = static_cast<char>('a' + rng() % 2);
        return s;
      };
      const std::string x = gen(1 + rng() % 24), y = gen(1 + rng() % 24);
      const int k = static_cast<int>(rng() % 3);
      const auto truth = oracle::lcf_k_brute(x, y, k);
      const auto got = solve(x, y, k, 1);
      if (got.length != truth.length) ++mismatched;
    }
    report("oracle-agreement", mismatched == 0, std::to_string(mismatched) + " of 200 disagree");
  }
  return failures == 0 ? kExitFound : kExitNone;
}

int run_bench(const RunConfig& config, std::ostream& out) {
  if (config.bench_sigma < 1 || config.bench_sigma > 26) throw InputError("--sigma must be in [1, 26]");
  std::mt19937_64 rng(config.seed);
  SolveOptions options;
  options.threads = static_cast<unsigned>(parse_threads(config));
  out << "n\tmin_len\tk\tcuts\tfamily\ttrie_nodes\tlength\tms\n";
  for (std::uint64_t n = std::max<std::uint32_t>(config.bench_start, 2); n <= config.bench_max; n *= 2) {
    const double lg = std::log2(static_cast<double>(n));
    const auto min_len = static_cast<std::uint32_t>(std::max<double>(1.0, std::min(std::ceil(std::pow(lg, 4)), n / 2.0)));
    auto gen = [&](std::uint64_t len) {
      std::string s(len, 'a');
      for (auto& c : s) c = static_cast<char>('a' + rng() % config.bench_sigma);
      return s;
    };
    std::string x = gen(n), y = gen(n);
    const std::uint64_t planted = std::min<std::uint64_t>(n, min_len + (n - min_len) / 2);
    const std::uint64_t xs = rng() % (n - planted + 1), ys = rng() % (n - planted + 1);
    for (std::uint64_t i = 0; i < planted; ++i) y[ys + i] = x[xs + i];
    for (int e = 0; e < config.k && config.bench_sigma > 1; ++e) {
      const std::uint64_t at = ys + rng() % planted;
      y[at] = static_cast<char>('a' + (y[at] - 'a' + 1) % config.bench_sigma);
    }
    const auto start = Clock::now();
    const auto report = solve_report(x, y, config.k, min_len, options);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out << n << '\t' << min_len << '\t' << config.k << '\t' << report.cut_count << '\t' << report.family_size << '\t'
        << report.trie_nodes << '\t' << report.result.length << '\t' << std::fixed << std::setprecision(1) << ms
        << '\n';
    out.unsetf(std::ios::fixed);
  }
  return kExitFound;
}

}  // namespace

std::pair<std::string, std::string> read_inputs(const RunConfig& config, std::istream& in) {
  const bool fasta = config.input_format == InputFormat::Fasta;
  if (config.inputs.empty()) {
    const std::string text = slurp("-", in);
    if (fasta) {
      auto records = fasta_records(text, "stdin");
      if (records.size() != 2) throw InputError("stdin: expected exactly two FASTA records");
      return {records[0], records[1]};
    }
    std::vector<std::string> lines;
    for (const auto& line : split_lines(text)) {
      if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() != 2) throw InputError("stdin: expected exactly two non-empty lines");
    return {lines[0], lines[1]};
  }
  if (config.inputs.size() != 2) throw InputError("expected two input files (or none to read stdin)");
  if (config.inputs[0] == "-" && config.inputs[1] == "-") throw InputError("stdin can supply only one of the inputs");
  std::string seq[2];
  for (int i = 0; i < 2; ++i) {
    const std::string text = slurp(config.inputs[i], in);
    if (fasta) {
      auto records = fasta_records(text, config.inputs[i]);
      if (records.size() != 1) throw InputError(config.inputs[i] + ": expected a single FASTA record");
      seq[i] = std::move(records[0]);
    } else {
      seq[i] = raw_sequence(text);
    }
  }
  return {seq[0], seq[1]};
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.k < 0) throw InputError("--k must be non-negative");
    if (config.min_len < 1) throw InputError("--min-len must be at least 1");
    switch (config.command) {
      case Command::Find: return run_find(config, in, out);
      case Command::Oracle: return run_oracle(config, in, out);
      case Command::Selftest: return run_selftest(out);
      case Command::Bench: return run_bench(config, out);
    }
  } catch (const InputError& e) {
    err << "lcfk: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest common factor with at most k mismatches"};
  app.require_subcommand(1);
  RunConfig config;
  std::int64_t min_len = 1;
  unsigned threads = 0;
  std::string input_format = "raw", output_format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "maximum number of mismatches")->check(CLI::NonNegativeNumber);
    sub->add_option("--min-len", min_len, "report only factors at least this long");
    sub->add_option("--format", output_format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--input-format", input_format, "input format")->check(CLI::IsMember({"raw", "fasta"}));
    sub->add_flag("--timing", config.timing, "append elapsed_ms to the record");
    sub->add_option("inputs", config.inputs, "X and Y input files ('-' for stdin); none reads both from stdin");
  };
  CLI::App* find = app.add_subcommand("find", "run the solver");
  add_common(find);
  find->add_option("--threads", threads, "worker threads (default: LCFK_THREADS or 1)")->check(CLI::PositiveNumber);
  CLI::App* orc = app.add_subcommand("oracle", "run the quadratic reference algorithm");
  add_common(orc);
  orc->add_option("--max-cells", config.max_cells, "refuse inputs with |X|*|Y| above this");
  app.add_subcommand("selftest", "run the built-in golden cases");
  CLI::App* bench = app.add_subcommand("bench", "time the solver on synthetic inputs at doubling sizes");
  bench->add_option("--k", config.k, "maximum number of mismatches")->check(CLI::NonNegativeNumber);
  bench->add_option("--start", config.bench_start, "first length");
  bench->add_option("--max-n", config.bench_max, "largest length");
  bench->add_option("--sigma", config.bench_sigma, "alphabet size");
  bench->add_option("--seed", config.seed, "random seed");
  bench->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  config.k = 0;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lcfk: " << e.what() << '\n';
    return kExitUsage;
  }
  if (min_len < 1 || min_len > 0xffffffffLL) {
    err << "lcfk: --min-len must be at least 1\n";
    return kExitUsage;
  }
  config.min_len = static_cast<std::uint32_t>(min_len);
  if (threads > 0) config.threads = threads;
  config.input_format = input_format == "fasta" ? InputFormat::Fasta : InputFormat::Raw;
  config.output_format = output_format == "tsv" ? OutputFormat::Tsv : OutputFormat::Json;
  if (find->parsed()) {
    config.command = Command::Find;
  } else if (orc->parsed()) {
    config.command = Command::Oracle;
  } else if (bench->parsed()) {
    config.command = Command::Bench;
    if (bench->count("--k") == 0) config.k = 1;
  } else {
    config.command = Command::Selftest;
  }
  return run(config, in, out, err);
}

}  // namespace lcfk::cli

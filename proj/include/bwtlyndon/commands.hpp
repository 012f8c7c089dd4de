// Copyright 2026 The bwtlyndon Authors
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

// The `bwtlyndon` command line: build, invert, bench.

#ifndef BWTLYNDON_COMMANDS_HPP
#define BWTLYNDON_COMMANDS_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bwtlyndon/alphabet.hpp"
#include "bwtlyndon/bench.hpp"
#include "bwtlyndon/format.hpp"

namespace bwtlyndon::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

/// Inputs longer than this many symbols need --force.
inline constexpr std::size_t kDefaultInputCap = std::size_t{1} << 20;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct BuildOptions {
  std::string input = "-";
  AlphabetMode alphabet = AlphabetMode::shift;
  OutputFormat format = OutputFormat::text;
  std::string out_bwt;  // empty or "-" means stdout
  std::string out_la;
  bool verify = false;
  bool trace = false;
  bool force = false;
  // Test-only: runs on the finished buffers before verification.
  std::function<void(std::span<Symbol> bwt, std::span<std::size_t> la)> tamper;
};

struct InvertOptions {
  std::string input = "-";
  AlphabetMode alphabet = AlphabetMode::shift;  // text format only
  OutputFormat format = OutputFormat::text;
  std::string output;
};

int cmd_build(const BuildOptions& options, Io io);
int cmd_invert(const InvertOptions& options, Io io);
int cmd_bench(const BenchConfig& config, Io io);

/// Full argument parsing and dispatch; argv[0] is the program name.
int run_cli(std::span<const std::string> args, Io io);

}  // namespace bwtlyndon::cli

#endif  // BWTLYNDON_COMMANDS_HPP

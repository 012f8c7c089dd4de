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

#include "bwtlyndon/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>

#include "bwtlyndon/lyndon.hpp"
#include "bwtlyndon/oracles.hpp"
#include "bwtlyndon/verify.hpp"

namespace bwtlyndon::cli {

static_assert(std::is_same_v<std::size_t, std::uint64_t>, "LA entries are stored as 64-bit words");

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_stdio(const std::string& path) { return path.empty() || path == "-"; }

std::string read_all(const std::string& path, std::istream& in) {
  if (is_stdio(path)) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) throw IoError("error while reading '" + path + "'");
  return data;
}

void write_all(const std::string& path, const std::string& data, std::ostream& out) {
  if (is_stdio(path)) {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw IoError("error while writing '" + path + "'");
}

std::vector<std::uint64_t> parse_words(const std::string& data) {
  std::vector<std::uint64_t> words;
  std::istringstream stream(data);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      if (token.front() == '-') throw std::invalid_argument("negative");
      value = std::stoull(token, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw AlphabetError("word " + std::to_string(words.size()) + " is not an unsigned integer: '" + token + "'",
                          words.size());
    }
    words.push_back(value);
  }
  return words;
}

std::string render_symbol(Symbol symbol, AlphabetMode mode) {
  if (symbol == kSentinel) return "$";
  if (mode == AlphabetMode::words) return std::to_string(symbol);
  const unsigned char byte = decode_symbol(symbol, mode);
  if (byte >= 0x21 && byte < 0x7f) return std::string(1, static_cast<char>(byte));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", byte);
  return buf;
}

std::string render_suffix(std::span<const Symbol> text, std::size_t from, AlphabetMode mode) {
  std::string out;
  for (std::size_t i = from; i < text.size(); ++i) {
    if (mode == AlphabetMode::words && !out.empty()) out.push_back(' ');
    out += render_symbol(text[i], mode);
  }
  return out;
}

// Prints the window after iteration s: row index, BWT symbol, rank and, for
// short texts, the suffix that owns the row.
class TraceTable {
 public:
  TraceTable(std::span<const Symbol> original, AlphabetMode mode, std::ostream& os)
      : original_(original), mode_(mode), os_(os) {}

  void operator()(const IterationView<Symbol>& view) const {
    const std::size_t n = view.buffer.size();
    os_ << "# s=" << view.s << " p=" << view.p << " r_local=" << view.r_local << " r_abs=" << view.r_abs() << '\n';
    os_ << "mark\ti\tbwt\tisa" << (n <= 32 ? "\tsuffix" : "") << '\n';
    for (std::size_t row = view.s; row < n; ++row) {
      std::string mark;
      if (row == view.p) mark += "p";
      if (row == view.r_abs()) mark += "r";
      os_ << mark << '\t' << row << '\t' << render_symbol(view.buffer[row], mode_) << '\t'
          << view.ranks[row];
      if (n <= 32) {
        // Row `row` holds the suffix whose local rank is row - s.
        for (std::size_t k = view.s; k < n; ++k) {
          if (view.ranks[k] == row - view.s) {
            os_ << '\t' << render_suffix(original_, k, mode_);
            break;
          }
        }
      }
      os_ << '\n';
    }
  }

 private:
  std::span<const Symbol> original_;
  AlphabetMode mode_;
  std::ostream& os_;
};

Text encode_input(const std::string& data, AlphabetMode mode) {
  if (mode == AlphabetMode::words) {
    const auto words = parse_words(data);
    return encode_words(words);
  }
  return encode_bytes(data, mode);
}

}  // namespace

int cmd_build(const BuildOptions& options, Io io) {
  try {
    const std::string data = read_all(options.input, io.in);
    Text text = encode_input(data, options.alphabet);
    if (text.size() - 1 > kDefaultInputCap && !options.force) {
      io.err << "error: input has " << text.size() - 1 << " symbols, above the " << kDefaultInputCap
             << " cap for a quadratic-time build; pass --force to run anyway\n";
      return kUsage;
    }

    const bool keep_original = options.verify || options.trace;
    const std::vector<Symbol> original = keep_original ? text.vector() : std::vector<Symbol>{};

    const auto buffer = text.mutable_symbols();
    std::vector<std::size_t> ranks(buffer.size());
    if (options.trace) {
      bwt_lyndon_inplace(buffer, std::span<std::size_t>(ranks), TraceTable(original, options.alphabet, io.err));
    } else {
      bwt_lyndon_inplace(buffer, std::span<std::size_t>(ranks));
    }
    if (options.tamper) options.tamper(buffer, ranks);

    if (options.verify) {
      if (const auto mismatch = verify_against_oracles(original, buffer, ranks)) {
        io.err << "verification failed: " << describe(*mismatch) << '\n';
        return kMismatch;
      }
      io.err << "verified " << buffer.size() << " symbols against the oracles\n";
    }

    switch (options.format) {
      case OutputFormat::text:
        write_all(options.out_bwt, write_text_bwt(buffer, options.alphabet), io.out);
        write_all(options.out_la, write_text_la(ranks), io.out);
        break;
      case OutputFormat::binary:
      case OutputFormat::json: {
        const auto record = make_record(options.alphabet, text.vector(), std::move(ranks));
        const std::string bytes =
            options.format == OutputFormat::binary ? write_binary(record) : write_json(record);
        if (is_stdio(options.out_bwt) && is_stdio(options.out_la)) {
          write_all("-", bytes, io.out);
        } else {
          if (!is_stdio(options.out_bwt)) write_all(options.out_bwt, bytes, io.out);
          if (!is_stdio(options.out_la)) write_all(options.out_la, bytes, io.out);
        }
        break;
      }
    }
    return kOk;
  } catch (const AlphabetError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  }
}

int cmd_invert(const InvertOptions& options, Io io) {
  try {
    const std::string data = read_all(options.input, io.in);
    std::vector<Symbol> bwt;
    AlphabetMode mode = options.alphabet;
    switch (options.format) {
      case OutputFormat::text:
        bwt = read_text_bwt(data, mode);
        break;
      case OutputFormat::binary: {
        auto record = read_binary(data);
        mode = record.alphabet_mode;
        bwt = std::move(record.bwt);
        break;
      }
      case OutputFormat::json: {
        auto record = read_json(data);
        mode = record.alphabet_mode;
        bwt = std::move(record.bwt);
        break;
      }
    }

    const auto text = oracle::invert_bwt(bwt);
    if (mode == AlphabetMode::words) {
      std::string out;
      for (auto word : decode_words(text)) {
        out += std::to_string(word);
        out.push_back('\n');
      }
      write_all(options.output, out, io.out);
    } else {
      write_all(options.output, decode_bytes(text, mode), io.out);
    }
    return kOk;
  } catch (const oracle::NotABwtImage& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const AlphabetError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    io.err << "error: " << e.what() << '\n';
    return kIo;
  }
}

int cmd_bench(const BenchConfig& config, Io io) {
  if (config.min_n == 0 || config.max_n < config.min_n || config.points < 2 || config.trials == 0) {
    io.err << "error: bench needs 0 < --min <= --max, --points >= 2 and --trials >= 1\n";
    return kUsage;
  }
  const auto report = run_bench(config);
  io.out << bench_csv(report);
  io.out.flush();
  return kOk;
}

int run_cli(std::span<const std::string> args, Io io) {
  CLI::App app{"In-place BWT and Lyndon array construction in constant extra space", "bwtlyndon"};
  app.require_subcommand(1);

  const std::vector<std::string> alphabets{"shift", "strict", "words"};
  const std::vector<std::string> formats{"text", "binary", "json"};

  BuildOptions build;
  std::string build_alphabet = "shift";
  std::string build_format = "text";
  auto* build_cmd = app.add_subcommand("build", "Compute the BWT and Lyndon array of a file");
  build_cmd->add_option("input", build.input, "Input file, '-' for stdin")->capture_default_str();
  build_cmd->add_option("--alphabet", build_alphabet, "shift | strict | words")
      ->check(CLI::IsMember(alphabets))
      ->capture_default_str();
  build_cmd->add_option("--format", build_format, "text | binary | json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  build_cmd->add_option("--out-bwt", build.out_bwt, "BWT output path (default stdout)");
  build_cmd->add_option("--out-la", build.out_la, "Lyndon array output path (default stdout)");
  build_cmd->add_flag("--verify", build.verify, "Check the result against brute-force oracles");
  build_cmd->add_flag("--trace", build.trace, "Print every iteration's window to stderr");
  build_cmd->add_flag("--force", build.force, "Allow inputs above the 2^20-symbol cap");

  InvertOptions invert;
  std::string invert_alphabet = "shift";
  std::string invert_format = "text";
  auto* invert_cmd = app.add_subcommand("invert", "Recover the original input from a BWT");
  invert_cmd->add_option("input", invert.input, "BWT file, '-' for stdin")->capture_default_str();
  invert_cmd->add_option("--alphabet", invert_alphabet, "Alphabet of a text-format BWT")
      ->check(CLI::IsMember(alphabets))
      ->capture_default_str();
  invert_cmd->add_option("--format", invert_format, "text | binary | json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  invert_cmd->add_option("-o,--output", invert.output, "Output path (default stdout)");

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the construction on random byte texts");
  bench_cmd->add_option("--min", bench.min_n, "Smallest text length")->capture_default_str();
  bench_cmd->add_option("--max", bench.max_n, "Largest text length")->capture_default_str();
  bench_cmd->add_option("--points", bench.points, "Number of sizes")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Trials per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  if (*build_cmd) {
    build.alphabet = parse_alphabet_mode(build_alphabet);
    build.format = parse_output_format(build_format);
    return cmd_build(build, io);
  }
  if (*invert_cmd) {
    invert.alphabet = parse_alphabet_mode(invert_alphabet);
    invert.format = parse_output_format(invert_format);
    return cmd_invert(invert, io);
  }
  return cmd_bench(bench, io);
}

}  // namespace bwtlyndon::cli

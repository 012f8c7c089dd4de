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

// On-disk forms of a BWT + Lyndon array result.
//
// Binary record (little endian):
//   "BWLA" | version u8 (=1) | alphabet mode u8 | n u64
//   | n BWT symbols (u16 shift, u8 strict, u64 words) | n LA entries u64
//   | checksum u64
//
// Text form, two files:
//   BWT, shift/strict: decimal sentinel index, '\n', then the n-1 decoded
//                      non-sentinel bytes verbatim.
//   BWT, words:        one decimal symbol per line, sentinel written as 0.
//   LA:                one decimal value per line.
//
// JSON mirrors OutputRecord:
//   {"n":..,"alphabet_mode":"shift","bwt":[..],"la":[..],"checksum":..}

#ifndef BWTLYNDON_FORMAT_HPP
#define BWTLYNDON_FORMAT_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwtlyndon/alphabet.hpp"

namespace bwtlyndon {

enum class OutputFormat { text, binary, json };

OutputFormat parse_output_format(std::string_view name);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputRecord {
  std::uint64_t n = 0;
  std::vector<Symbol> bwt;
  std::vector<std::uint64_t> la;
  AlphabetMode alphabet_mode = AlphabetMode::shift;
  std::uint64_t checksum = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// FNV-1a over the little-endian bytes of n, the mode, every BWT symbol and
/// every LA entry.
std::uint64_t record_checksum(AlphabetMode mode, std::span<const Symbol> bwt,
                              std::span<const std::uint64_t> la);

/// Builds a record and fills in n and the checksum.
OutputRecord make_record(AlphabetMode mode, std::vector<Symbol> bwt, std::vector<std::uint64_t> la);

std::string write_binary(const OutputRecord& record);
OutputRecord read_binary(std::string_view bytes);

std::string write_json(const OutputRecord& record);
OutputRecord read_json(std::string_view text);

std::string write_text_bwt(std::span<const Symbol> bwt, AlphabetMode mode);
std::vector<Symbol> read_text_bwt(std::string_view bytes, AlphabetMode mode);

std::string write_text_la(std::span<const std::uint64_t> la);
std::vector<std::uint64_t> read_text_la(std::string_view bytes);

}  // namespace bwtlyndon

#endif  // BWTLYNDON_FORMAT_HPP

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

#ifndef BWTLYNDON_ALPHABET_HPP
#define BWTLYNDON_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwtlyndon {

/// A symbol of the ordered alphabet. Natural integer order; 0 is the sentinel.
using Symbol = std::uint64_t;

/// The reserved end marker. Compares smaller than every other symbol.
template <class Sym>
inline constexpr Sym sentinel_v = Sym{0};

inline constexpr Symbol kSentinel = sentinel_v<Symbol>;

/// How raw input maps onto symbols.
///  - shift:  byte b becomes symbol b+1, so every byte value is accepted.
///  - strict: byte b becomes symbol b; zero bytes are rejected.
///  - words:  unsigned integers are taken verbatim; zero is rejected.
enum class AlphabetMode : std::uint8_t { shift = 0, strict = 1, words = 2 };

std::string_view to_string(AlphabetMode mode);
AlphabetMode parse_alphabet_mode(std::string_view name);

/// Raised when raw input cannot be encoded into, or decoded out of, a Text.
class AlphabetError : public std::invalid_argument {
 public:
  AlphabetError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}

  /// Index of the first offending element.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A sequence of symbols terminated by exactly one sentinel.
///
/// The invariant holds at construction only: the in-place constructions
/// overwrite the symbols with the BWT, which moves the sentinel.
class Text {
 public:
  /// Throws AlphabetError unless `symbols` is non-empty and ends in the only
  /// sentinel it contains.
  static Text from_symbols(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::span<Symbol> mutable_symbols() noexcept { return symbols_; }
  const std::vector<Symbol>& vector() const noexcept { return symbols_; }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  explicit Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::vector<Symbol> symbols_;
};

Text encode_bytes(std::string_view raw, AlphabetMode mode);
Text encode_words(std::span<const std::uint64_t> raw);

/// Maps one non-sentinel symbol back to its byte. Throws AlphabetError
/// (offset 0) if the symbol is outside the mode's range.
unsigned char decode_symbol(Symbol symbol, AlphabetMode mode);

/// Inverse of encode_bytes. `symbols` must be a valid text for the mode.
std::string decode_bytes(std::span<const Symbol> symbols, AlphabetMode mode);

/// Inverse of encode_words.
std::vector<std::uint64_t> decode_words(std::span<const Symbol> symbols);

}  // namespace bwtlyndon

#endif  // BWTLYNDON_ALPHABET_HPP

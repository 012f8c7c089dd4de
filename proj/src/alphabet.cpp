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

#include "bwtlyndon/alphabet.hpp"

#include <stdexcept>

namespace bwtlyndon {

std::string_view to_string(AlphabetMode mode) {
  switch (mode) {
    case AlphabetMode::shift:
      return "shift";
    case AlphabetMode::strict:
      return "strict";
    case AlphabetMode::words:
      return "words";
  }
  return "unknown";
}

AlphabetMode parse_alphabet_mode(std::string_view name) {
  if (name == "shift") return AlphabetMode::shift;
  if (name == "strict") return AlphabetMode::strict;
  if (name == "words") return AlphabetMode::words;
  throw std::invalid_argument("unknown alphabet mode '" + std::string(name) + "'");
}

Text Text::from_symbols(std::vector<Symbol> symbols) {
  if (symbols.empty()) {
    throw AlphabetError("text is empty; it must end in the sentinel", 0);
  }
  const std::size_t last = symbols.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (symbols[i] == kSentinel) {
      throw AlphabetError("sentinel before end of text at offset " + std::to_string(i), i);
    }
  }
  if (symbols[last] != kSentinel) {
    throw AlphabetError("text does not end in the sentinel", last);
  }
  return Text(std::move(symbols));
}

Text encode_bytes(std::string_view raw, AlphabetMode mode) {
  if (mode == AlphabetMode::words) {
    throw std::invalid_argument("encode_bytes does not accept words mode");
  }
  std::vector<Symbol> symbols;
  symbols.reserve(raw.size() + 1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto byte = static_cast<unsigned char>(raw[i]);
    if (mode == AlphabetMode::strict && byte == 0) {
      throw AlphabetError("zero byte at offset " + std::to_string(i) + " in strict mode", i);
    }
    symbols.push_back(mode == AlphabetMode::shift ? Symbol{byte} + 1 : Symbol{byte});
  }
  symbols.push_back(kSentinel);
  return Text::from_symbols(std::move(symbols));
}

Text encode_words(std::span<const std::uint64_t> raw) {
  std::vector<Symbol> symbols;
  symbols.reserve(raw.size() + 1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == kSentinel) {
      throw AlphabetError("zero word at offset " + std::to_string(i) + " is reserved", i);
    }
    symbols.push_back(raw[i]);
  }
  symbols.push_back(kSentinel);
  return Text::from_symbols(std::move(symbols));
}

unsigned char decode_symbol(Symbol symbol, AlphabetMode mode) {
  switch (mode) {
    case AlphabetMode::shift:
      if (symbol >= 1 && symbol <= 256) return static_cast<unsigned char>(symbol - 1);
      break;
    case AlphabetMode::strict:
      if (symbol >= 1 && symbol <= 255) return static_cast<unsigned char>(symbol);
      break;
    case AlphabetMode::words:
      throw std::invalid_argument("words mode symbols have no byte form");
  }
  throw AlphabetError("symbol " + std::to_string(symbol) + " out of range for " +
                          std::string(to_string(mode)) + " mode",
                      0);
}

namespace {

void require_terminated(std::span<const Symbol> symbols) {
  if (symbols.empty() || symbols.back() != kSentinel) {
    throw AlphabetError("text does not end in the sentinel", symbols.empty() ? 0 : symbols.size() - 1);
  }
}

}  // namespace

std::string decode_bytes(std::span<const Symbol> symbols, AlphabetMode mode) {
  require_terminated(symbols);
  std::string out;
  out.reserve(symbols.size() - 1);
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
    try {
      out.push_back(static_cast<char>(decode_symbol(symbols[i], mode)));
    } catch (const AlphabetError& e) {
      throw AlphabetError(std::string(e.what()) + " at offset " + std::to_string(i), i);
    }
  }
  return out;
}

std::vector<std::uint64_t> decode_words(std::span<const Symbol> symbols) {
  require_terminated(symbols);
  std::vector<std::uint64_t> out;
  out.reserve(symbols.size() - 1);
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
    if (symbols[i] == kSentinel) {
      throw AlphabetError("sentinel before end of text at offset " + std::to_string(i), i);
    }
    out.push_back(symbols[i]);
  }
  return out;
}

}  // namespace bwtlyndon

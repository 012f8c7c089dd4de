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

#include "bwtlyndon/format.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>

#include <json.hpp>

namespace bwtlyndon {

namespace {

constexpr std::string_view kMagic = "BWLA";
constexpr std::uint8_t kVersion = 1;

std::size_t symbol_width(AlphabetMode mode) {
  switch (mode) {
    case AlphabetMode::shift:
      return 2;
    case AlphabetMode::strict:
      return 1;
    case AlphabetMode::words:
      return 8;
  }
  return 8;
}

void put_le(std::string& out, std::uint64_t value, std::size_t width) {
  for (std::size_t b = 0; b < width; ++b) out.push_back(static_cast<char>((value >> (8 * b)) & 0xff));
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t le(std::size_t width) {
    if (bytes_.size() - pos_ < width) throw FormatError("truncated binary record");
    std::uint64_t value = 0;
    for (std::size_t b = 0; b < width; ++b) {
      value |= std::uint64_t{static_cast<unsigned char>(bytes_[pos_ + b])} << (8 * b);
    }
    pos_ += width;
    return value;
  }

  std::string_view take(std::size_t count) {
    if (bytes_.size() - pos_ < count) throw FormatError("truncated binary record");
    auto out = bytes_.substr(pos_, count);
    pos_ += count;
    return out;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

AlphabetMode mode_from_byte(std::uint64_t byte) {
  if (byte > static_cast<std::uint8_t>(AlphabetMode::words)) {
    throw FormatError("unknown alphabet mode byte " + std::to_string(byte));
  }
  return static_cast<AlphabetMode>(byte);
}

std::uint64_t parse_decimal(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw FormatError("line " + std::to_string(line) + ": expected an unsigned integer, got '" +
                      std::string(token) + "'");
  }
  return value;
}

// Splits on '\n'; a single trailing newline does not start a new line.
std::vector<std::uint64_t> parse_lines(std::string_view bytes) {
  std::vector<std::uint64_t> values;
  std::size_t line = 1;
  while (!bytes.empty()) {
    const auto eol = bytes.find('\n');
    if (eol == std::string_view::npos) {
      throw FormatError("line " + std::to_string(line) + ": missing trailing newline");
    }
    values.push_back(parse_decimal(bytes.substr(0, eol), line));
    bytes.remove_prefix(eol + 1);
    ++line;
  }
  return values;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "binary") return OutputFormat::binary;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::uint64_t record_checksum(AlphabetMode mode, std::span<const Symbol> bwt,
                              std::span<const std::uint64_t> la) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint64_t value, std::size_t width) {
    for (std::size_t b = 0; b < width; ++b) {
      hash ^= (value >> (8 * b)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(bwt.size(), 8);
  mix(static_cast<std::uint8_t>(mode), 1);
  for (auto symbol : bwt) mix(symbol, 8);
  for (auto value : la) mix(value, 8);
  return hash;
}

OutputRecord make_record(AlphabetMode mode, std::vector<Symbol> bwt, std::vector<std::uint64_t> la) {
  if (bwt.size() != la.size()) throw FormatError("BWT and LA lengths differ");
  OutputRecord record;
  record.n = bwt.size();
  record.alphabet_mode = mode;
  record.checksum = record_checksum(mode, bwt, la);
  record.bwt = std::move(bwt);
  record.la = std::move(la);
  return record;
}

std::string write_binary(const OutputRecord& record) {
  const std::size_t width = symbol_width(record.alphabet_mode);
  std::string out;
  out.reserve(14 + record.n * (width + 8) + 8);
  out.append(kMagic);
  out.push_back(static_cast<char>(kVersion));
  out.push_back(static_cast<char>(record.alphabet_mode));
  put_le(out, record.n, 8);
  for (auto symbol : record.bwt) {
    if (width < 8 && (symbol >> (8 * width)) != 0) {
      throw FormatError("symbol " + std::to_string(symbol) + " does not fit " +
                        std::string(to_string(record.alphabet_mode)) + " mode width");
    }
    put_le(out, symbol, width);
  }
  for (auto value : record.la) put_le(out, value, 8);
  put_le(out, record.checksum, 8);
  return out;
}

OutputRecord read_binary(std::string_view bytes) {
  Reader reader(bytes);
  if (bytes.size() < kMagic.size() || reader.take(kMagic.size()) != kMagic) {
    throw FormatError("missing BWLA magic");
  }
  if (const auto version = reader.le(1); version != kVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  OutputRecord record;
  record.alphabet_mode = mode_from_byte(reader.le(1));
  record.n = reader.le(8);
  const std::size_t width = symbol_width(record.alphabet_mode);
  if (reader.remaining() != record.n * (width + 8) + 8) {
    throw FormatError("binary record length does not match n=" + std::to_string(record.n));
  }
  record.bwt.resize(record.n);
  record.la.resize(record.n);
  for (auto& symbol : record.bwt) symbol = reader.le(width);
  for (auto& value : record.la) value = reader.le(8);
  record.checksum = reader.le(8);
  if (record.checksum != record_checksum(record.alphabet_mode, record.bwt, record.la)) {
    throw FormatError("checksum mismatch");
  }
  return record;
}

std::string write_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["alphabet_mode"] = std::string(to_string(record.alphabet_mode));
  j["bwt"] = record.bwt;
  j["la"] = record.la;
  j["checksum"] = record.checksum;
  return j.dump() + "\n";
}

OutputRecord read_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    OutputRecord record;
    record.n = j.at("n").get<std::uint64_t>();
    record.alphabet_mode = parse_alphabet_mode(j.at("alphabet_mode").get<std::string>());
    record.bwt = j.at("bwt").get<std::vector<Symbol>>();
    record.la = j.at("la").get<std::vector<std::uint64_t>>();
    record.checksum = j.at("checksum").get<std::uint64_t>();
    if (record.bwt.size() != record.n || record.la.size() != record.n) {
      throw FormatError("JSON record arrays do not have length n=" + std::to_string(record.n));
    }
    if (record.checksum != record_checksum(record.alphabet_mode, record.bwt, record.la)) {
      throw FormatError("checksum mismatch");
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string write_text_bwt(std::span<const Symbol> bwt, AlphabetMode mode) {
  std::string out;
  if (mode == AlphabetMode::words) {
    for (auto symbol : bwt) {
      out += std::to_string(symbol);
      out.push_back('\n');
    }
    return out;
  }
  const auto sentinel = std::find(bwt.begin(), bwt.end(), kSentinel);
  if (sentinel == bwt.end() || std::find(sentinel + 1, bwt.end(), kSentinel) != bwt.end()) {
    throw FormatError("BWT must contain exactly one sentinel");
  }
  out += std::to_string(sentinel - bwt.begin());
  out.push_back('\n');
  for (std::size_t i = 0; i < bwt.size(); ++i) {
    if (bwt[i] != kSentinel) out.push_back(static_cast<char>(decode_symbol(bwt[i], mode)));
  }
  return out;
}

std::vector<Symbol> read_text_bwt(std::string_view bytes, AlphabetMode mode) {
  if (mode == AlphabetMode::words) return parse_lines(bytes);
  const auto eol = bytes.find('\n');
  if (eol == std::string_view::npos) throw FormatError("missing sentinel index line");
  const std::uint64_t index = parse_decimal(bytes.substr(0, eol), 1);
  const auto payload = bytes.substr(eol + 1);
  if (index > payload.size()) {
    throw FormatError("sentinel index " + std::to_string(index) + " beyond payload length " +
                      std::to_string(payload.size()));
  }
  std::vector<Symbol> bwt;
  bwt.reserve(payload.size() + 1);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (i == index) bwt.push_back(kSentinel);
    const auto byte = static_cast<unsigned char>(payload[i]);
    // A zero byte in strict mode is a second sentinel; keep it so the
    // inverter can reject the image.
    bwt.push_back(mode == AlphabetMode::shift ? Symbol{byte} + 1 : Symbol{byte});
  }
  if (index == payload.size()) bwt.push_back(kSentinel);
  return bwt;
}

std::string write_text_la(std::span<const std::uint64_t> la) {
  std::string out;
  for (auto value : la) {
    out += std::to_string(value);
    out.push_back('\n');
  }
  return out;
}

std::vector<std::uint64_t> read_text_la(std::string_view bytes) { return parse_lines(bytes); }

}  // namespace bwtlyndon

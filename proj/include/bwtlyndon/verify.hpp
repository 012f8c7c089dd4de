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

#ifndef BWTLYNDON_VERIFY_HPP
#define BWTLYNDON_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "bwtlyndon/alphabet.hpp"

namespace bwtlyndon {

struct Mismatch {
  std::string what;  // "bwt", "la (nsv)", "la (duval)" or "length"
  std::size_t index = 0;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
};

std::string describe(const Mismatch& mismatch);

/// Recomputes BWT and LA of `text` with the brute-force oracles (LA by both
/// the NSV and the Duval route) and returns the first divergence, if any.
std::optional<Mismatch> verify_against_oracles(std::span<const Symbol> text, std::span<const Symbol> bwt,
                                               std::span<const std::size_t> la);

}  // namespace bwtlyndon

#endif  // BWTLYNDON_VERIFY_HPP

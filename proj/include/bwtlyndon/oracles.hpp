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

// Brute-force reference implementations straight from the definitions.
// Slow on purpose and independent of the in-place code; used for checking.

#ifndef BWTLYNDON_ORACLES_HPP
#define BWTLYNDON_ORACLES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bwtlyndon/alphabet.hpp"

namespace bwtlyndon::oracle {

/// Start positions of the suffixes in increasing lexicographic order.
std::vector<std::size_t> suffix_array_naive(std::span<const Symbol> text);

/// BWT[i] = text[sa[i] - 1], or the sentinel when sa[i] == 0.
std::vector<Symbol> bwt_from_sa(std::span<const Symbol> text, std::span<const std::size_t> sa);

/// isa[sa[i]] = i.
std::vector<std::size_t> isa_from_sa(std::span<const std::size_t> sa);

/// LA[i] = NSV(i) - i over the ISA, with a separate output array.
std::vector<std::size_t> la_from_isa_nsv(std::span<const std::size_t> isa);

/// True iff `word` is non-empty and strictly smaller than each proper suffix.
bool is_lyndon(std::span<const Symbol> word);

/// Lyndon array via the longest Lyndon prefix of every suffix (Duval scan).
std::vector<std::size_t> la_duval(std::span<const Symbol> text);

class NotABwtImage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// LF-mapping inversion. Throws NotABwtImage when `bwt` has no or several
/// sentinels or its LF permutation is not a single cycle.
std::vector<Symbol> invert_bwt(std::span<const Symbol> bwt);

}  // namespace bwtlyndon::oracle

#endif  // BWTLYNDON_ORACLES_HPP

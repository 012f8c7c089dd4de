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

// BWT and Lyndon array together, in place, with O(1) extra words.
//
// A caller-owned rank buffer of length n rides along with the in-place BWT.
// After iteration s it holds, at positions s..n-1, the rank of each suffix
// T[i..] among T[s..], ..., T[n-1..] (a permutation of 0..n-1-s). Inserting
// T[s..] with local rank r bumps every old rank >= r by one and stores r at
// position s. When s reaches 0 the buffer is the inverse suffix array.
//
// The rank condition is ">= r". A variant of the update written as
// "ranks[i] >= s" does not reproduce the worked BANANA$ states and is not
// used.
//
// An equivalent absolute convention keeps s + rank instead: base cases
// n-1, n-2 and a decrement of every entry <= s + r. Both stay in lockstep
// (absolute = s + local after every iteration); the local form is used here.
//
// The ISA becomes the Lyndon array through a next-smaller-value scan:
//   LA[i] = min{ k > i : ISA[k] < ISA[i] } - i, or n - i if no such k.
// The scan for i reads only indices > i, which still hold ISA values, so
// position i is overwritten as soon as it is done.

#ifndef BWTLYNDON_LYNDON_HPP
#define BWTLYNDON_LYNDON_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

#include "bwtlyndon/inplace_bwt.hpp"

namespace bwtlyndon {

/// Rank bookkeeping for inserting the suffix at s with local rank r_local:
/// ranks[s+1..n-1] entries >= r_local go up by one, ranks[s] = r_local.
inline void update_isa(std::span<std::size_t> ranks, std::size_t s, std::size_t r_local) noexcept {
  for (std::size_t i = s + 1; i < ranks.size(); ++i) ranks[i] += ranks[i] >= r_local;
  ranks[s] = r_local;
}

/// Overwrites `buffer` with its BWT and fills `ranks` with the inverse
/// suffix array. `hook` sees every iteration with both buffers.
template <class Sym, class Hook = NoTrace, class Less = std::less<>>
void bwt_isa_inplace(std::span<Sym> buffer, std::span<std::size_t> ranks, Hook&& hook = {},
                     Less less = {}) {
  require_valid_text(std::span<const Sym>(buffer));
  if (ranks.size() != buffer.size()) {
    throw std::invalid_argument("rank buffer length differs from text length");
  }
  const std::size_t n = buffer.size();
  if (n == 1) {
    ranks[0] = 0;
    return;
  }

  ranks[n - 2] = 1;
  ranks[n - 1] = 0;
  hook(IterationView<Sym>{n - 2, n - 1, 1, buffer, ranks});

  for (std::size_t s = n - 2; s-- > 0;) {
    const auto [p, r_local] = locate_and_rank(buffer, s, less);
    insert_and_shift(buffer, s, p, s + r_local);
    update_isa(ranks, s, r_local);
    hook(IterationView<Sym>{s, p, r_local, buffer, ranks});
  }
}

/// Converts a permutation of 0..n-1 (an ISA) into the Lyndon array, left to
/// right, in place. `Ranks` is anything with size() and operator[] yielding
/// an assignable reference to an unsigned word, e.g. std::span<std::size_t>.
template <class Ranks>
void isa_to_la_inplace(Ranks&& ranks) {
  const std::size_t n = ranks.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t rank = ranks[i];
    std::size_t j = i + 1;
    while (j < n && static_cast<std::size_t>(ranks[j]) >= rank) ++j;
    ranks[i] = j - i;
  }
}

/// BWT of `buffer` in place, Lyndon array in `ranks`. Constant extra words;
/// no dynamic allocation for valid input.
template <class Sym, class Hook = NoTrace, class Less = std::less<>>
void bwt_lyndon_inplace(std::span<Sym> buffer, std::span<std::size_t> ranks, Hook&& hook = {},
                        Less less = {}) {
  bwt_isa_inplace(buffer, ranks, hook, less);
  isa_to_la_inplace(ranks);
}

}  // namespace bwtlyndon

#endif  // BWTLYNDON_LYNDON_HPP

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

// In-place Burrows-Wheeler transform in O(n^2) time and O(1) extra words.
//
// The text buffer is overwritten right to left. Before iteration s the window
// buffer[s+1..n-1] holds BWT(T[s+1..n-1]) and the sentinel's position in the
// window is the rank of T[s+1..] among the suffixes inserted so far. Each
// iteration then
//
//   1. finds the sentinel at absolute index p,
//   2. computes the local rank r of T[s..] among T[s..], ..., T[n-1..]:
//      (#symbols in the window smaller than c) + (#c in buffer[s+1..p]),
//      where c = buffer[s],
//   3. stores c over the sentinel,
//   4. shifts buffer[s+1..s+r] one slot left and writes the sentinel at s+r.
//
// Two rank conventions show up: `r_local` is the rank inside the window,
// in [0, n-1-s]; `r_abs = s + r_local` is the buffer index the sentinel moves
// to. Both are carried in IterationView.
//
// Every routine is templated on the symbol type and on a strict-weak-order
// comparator so any ordered alphabet can be used. Sentinel detection uses
// equality with sentinel_v<Sym>; every other symbol test goes through the
// comparator.

#ifndef BWTLYNDON_INPLACE_BWT_HPP
#define BWTLYNDON_INPLACE_BWT_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "bwtlyndon/alphabet.hpp"

namespace bwtlyndon {

/// Raised when the construction state is corrupt (e.g. the window lost its
/// sentinel). Never thrown for valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// What a trace hook sees after iteration s. `ranks` is empty when only the
/// BWT is being built.
template <class Sym>
struct IterationView {
  std::size_t s;
  std::size_t p;
  std::size_t r_local;
  std::span<const Sym> buffer;
  std::span<const std::size_t> ranks;

  std::size_t r_abs() const noexcept { return s + r_local; }
};

struct NoTrace {
  template <class View>
  void operator()(const View&) const noexcept {}
};

/// Position p of the sentinel in buffer[s+1..n-1].
template <class Sym>
std::size_t find_sentinel(std::span<Sym> buffer, std::size_t s) {
  using Value = std::remove_const_t<Sym>;
  for (std::size_t i = s + 1; i < buffer.size(); ++i) {
    if (buffer[i] == sentinel_v<Value>) return i;
  }
  throw InvariantViolation("no sentinel in window starting at " + std::to_string(s + 1));
}

/// Local rank of the suffix starting at s, given the sentinel position p.
/// One pass over the window, one comparator call per window symbol.
template <class Sym, class Less = std::less<>>
std::size_t compute_rank(std::span<Sym> buffer, std::size_t s, std::size_t p, Less less = {}) {
  const auto c = buffer[s];
  std::size_t rank = 0;
  for (std::size_t i = s + 1; i < buffer.size(); ++i) {
    // Up to p both "< c" and "== c" count, i.e. "<= c".
    if (i <= p ? !less(c, buffer[i]) : less(buffer[i], c)) ++rank;
  }
  return rank;
}

/// Result of the fused Steps 1-2 scan.
struct SentinelRank {
  std::size_t p;
  std::size_t r_local;
};

/// Steps 1 and 2 in one left-to-right pass: count symbols <= c until the
/// sentinel is met, then symbols < c from the sentinel on. Same comparator
/// budget as compute_rank.
template <class Sym, class Less = std::less<>>
SentinelRank locate_and_rank(std::span<Sym> buffer, std::size_t s, Less less = {}) {
  using Value = std::remove_const_t<Sym>;
  const auto c = buffer[s];
  const std::size_t n = buffer.size();
  std::size_t rank = 0;
  std::size_t i = s + 1;
  for (; i < n && buffer[i] != sentinel_v<Value>; ++i) {
    if (!less(c, buffer[i])) ++rank;
  }
  if (i == n) {
    throw InvariantViolation("no sentinel in window starting at " + std::to_string(s + 1));
  }
  const std::size_t p = i;
  for (; i < n; ++i) {
    if (less(buffer[i], c)) ++rank;
  }
  return {p, rank};
}

/// Steps 3 and 4: c = buffer[s] replaces the sentinel at p, the block
/// buffer[s+1..r_abs] moves one slot left, and the sentinel lands at r_abs.
template <class Sym>
void insert_and_shift(std::span<Sym> buffer, std::size_t s, std::size_t p, std::size_t r_abs) noexcept {
  const Sym c = buffer[s];
  buffer[p] = c;
  for (std::size_t i = s; i < r_abs; ++i) buffer[i] = buffer[i + 1];
  buffer[r_abs] = sentinel_v<Sym>;
}

/// Throws std::invalid_argument unless `buffer` is non-empty and its only
/// sentinel is the last symbol.
template <class Sym>
void require_valid_text(std::span<const Sym> buffer) {
  if (buffer.empty()) throw std::invalid_argument("text is empty");
  const std::size_t last = buffer.size() - 1;
  if (buffer[last] != sentinel_v<Sym>) {
    throw std::invalid_argument("text does not end in the sentinel");
  }
  for (std::size_t i = 0; i < last; ++i) {
    if (buffer[i] == sentinel_v<Sym>) {
      throw std::invalid_argument("sentinel before end of text at offset " + std::to_string(i));
    }
  }
}

/// Overwrites `buffer` (a sentinel-terminated text) with its BWT.
///
/// `hook` is called after every iteration, base case included, with an
/// IterationView. No allocation happens outside the hook.
template <class Sym, class Hook = NoTrace, class Less = std::less<>>
void bwt_inplace(std::span<Sym> buffer, Hook&& hook = {}, Less less = {}) {
  require_valid_text(std::span<const Sym>(buffer));
  const std::size_t n = buffer.size();
  if (n == 1) return;

  // Base case s = n-2: the window "c$" is already its own BWT.
  hook(IterationView<Sym>{n - 2, n - 1, 1, buffer, {}});

  for (std::size_t s = n - 2; s-- > 0;) {
    const auto [p, r_local] = locate_and_rank(buffer, s, less);
    insert_and_shift(buffer, s, p, s + r_local);
    hook(IterationView<Sym>{s, p, r_local, buffer, {}});
  }
}

}  // namespace bwtlyndon

#endif  // BWTLYNDON_INPLACE_BWT_HPP

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

#include "bwtlyndon/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace bwtlyndon::oracle {

std::vector<std::size_t> suffix_array_naive(std::span<const Symbol> text) {
  std::vector<std::size_t> sa(text.size());
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::sort(sa.begin(), sa.end(), [text](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(text.begin() + a, text.end(), text.begin() + b, text.end());
  });
  return sa;
}

std::vector<Symbol> bwt_from_sa(std::span<const Symbol> text, std::span<const std::size_t> sa) {
  std::vector<Symbol> bwt(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    bwt[i] = sa[i] > 0 ? text[sa[i] - 1] : kSentinel;
  }
  return bwt;
}

std::vector<std::size_t> isa_from_sa(std::span<const std::size_t> sa) {
  std::vector<std::size_t> isa(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) isa[sa[i]] = i;
  return isa;
}

std::vector<std::size_t> la_from_isa_nsv(std::span<const std::size_t> isa) {
  const std::size_t n = isa.size();
  std::vector<std::size_t> la(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nsv = n;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (isa[k] < isa[i]) {
        nsv = k;
        break;
      }
    }
    la[i] = nsv - i;
  }
  return la;
}

bool is_lyndon(std::span<const Symbol> word) {
  if (word.empty()) return false;
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (!std::lexicographical_compare(word.begin(), word.end(), word.begin() + k, word.end())) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> la_duval(std::span<const Symbol> text) {
  const std::size_t n = text.size();
  std::vector<std::size_t> la(n);
  for (std::size_t start = 0; start < n; ++start) {
    // text[start..j-1] is a power of a Lyndon word of length j-k followed by
    // one of its prefixes; the scan stops at the first symbol that breaks it.
    std::size_t k = start;
    std::size_t j = start + 1;
    while (j < n && text[k] <= text[j]) {
      k = text[k] < text[j] ? start : k + 1;
      ++j;
    }
    la[start] = j - k;
  }
  return la;
}

std::vector<Symbol> invert_bwt(std::span<const Symbol> bwt) {
  const std::size_t n = bwt.size();
  const auto sentinels = std::count(bwt.begin(), bwt.end(), kSentinel);
  if (sentinels != 1) {
    throw NotABwtImage("not a BWT image: expected exactly one sentinel, found " +
                       std::to_string(sentinels));
  }

  // order[j] is the BWT row whose symbol becomes the j-th entry of the
  // sorted first column; following it walks the text forward.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [bwt](std::size_t a, std::size_t b) { return bwt[a] < bwt[b]; });

  const auto start = static_cast<std::size_t>(std::find(bwt.begin(), bwt.end(), kSentinel) - bwt.begin());
  std::vector<Symbol> text(n);
  std::size_t row = start;
  for (std::size_t k = 0; k < n; ++k) {
    row = order[row];
    text[k] = bwt[row];
    if ((row == start) != (k + 1 == n)) {
      throw NotABwtImage("not a BWT image: LF mapping is not a single cycle");
    }
  }
  return text;
}

}  // namespace bwtlyndon::oracle

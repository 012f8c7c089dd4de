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

#include "bwtlyndon/inplace_bwt.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bwtlyndon/oracles.hpp"
#include "test_support.hpp"

namespace bwtlyndon {
namespace {

using testing::str;
using testing::sym;
using Symbols = std::vector<Symbol>;

Symbols oracle_bwt(const Symbols& text) {
  return oracle::bwt_from_sa(text, oracle::suffix_array_naive(text));
}

// Comparator that counts its calls.
struct CountingLess {
  std::size_t* calls;
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    ++*calls;
    return a < b;
  }
};

// BANANA$ state before the s=0 insertion: T[0]='B', window = BWT(ANANA$).
Symbols banana_before_s0() { return sym("BANN$AA"); }

TEST(FindSentinel, BananaBeforeLastInsertion) {
  auto buf = banana_before_s0();
  EXPECT_EQ(find_sentinel(std::span{buf}, 0), 4u);
}

TEST(FindSentinel, BananaAtS4) {
  // Before iteration s=4 the window T[5..6] holds BWT("A$") = "A$".
  auto buf = sym("BANANA$");
  EXPECT_EQ(find_sentinel(std::span{buf}, 4), 6u);
}

TEST(FindSentinel, SingleSymbolWindow) {
  auto buf = sym("xy$");
  EXPECT_EQ(find_sentinel(std::span{buf}, 1), 2u);
}

TEST(FindSentinel, MissingSentinelIsInvariantViolation) {
  auto buf = sym("BANANA");
  EXPECT_THROW(find_sentinel(std::span{buf}, 0), InvariantViolation);
}

TEST(ComputeRank, BananaS0) {
  auto buf = banana_before_s0();
  EXPECT_EQ(compute_rank(std::span{buf}, 0, 4), 4u);
}

TEST(ComputeRank, BananaS1) {
  // T[1]='A' before a window holding BWT("NANA$") = "ANNA$".
  auto buf = sym("BAANNA$");
  ASSERT_EQ(find_sentinel(std::span{buf}, 1), 6u);
  EXPECT_EQ(compute_rank(std::span{buf}, 1, 6), 3u);
}

TEST(ComputeRank, BaseWindow) {
  auto buf = sym("z$");
  EXPECT_EQ(compute_rank(std::span{buf}, 0, 1), 1u);
}

TEST(InsertAndShift, BananaS0) {
  auto buf = banana_before_s0();
  insert_and_shift(std::span{buf}, 0, 4, 4);
  EXPECT_EQ(str(buf), "ANNB$AA");
}

TEST(InsertAndShift, BananaS2) {
  // T[2]='N' before BWT("ANA$") = "AN$A" in T[3..6]: p=5, r_local=4.
  auto buf = sym("BANAN$A");
  const std::size_t p = find_sentinel(std::span{buf}, 2);
  const std::size_t r = compute_rank(std::span{buf}, 2, p);
  EXPECT_EQ(p, 5u);
  EXPECT_EQ(r, 4u);
  insert_and_shift(std::span{buf}, 2, p, 2 + r);
  EXPECT_EQ(str(Symbols(buf.begin() + 2, buf.end())), "ANNA$");
  EXPECT_EQ(Symbols(buf.begin() + 2, buf.end()), oracle_bwt(sym("NANA$")));
}

TEST(InsertAndShift, NewSmallestSuffixMovesNothing) {
  // r_abs = s: empty shift block, only the two writes happen.
  auto buf = sym("ab$");
  insert_and_shift(std::span{buf}, 0, 2, 0);
  EXPECT_EQ(str(buf), "$ba");
}

TEST(BwtInplace, Banana) {
  auto buf = sym("BANANA$");
  bwt_inplace(std::span{buf});
  EXPECT_EQ(str(buf), "ANNB$AA");
}

TEST(BwtInplace, SentinelOnly) {
  auto buf = sym("$");
  bwt_inplace(std::span{buf});
  EXPECT_EQ(str(buf), "$");
}

TEST(BwtInplace, TwoSymbols) {
  auto buf = sym("q$");
  bwt_inplace(std::span{buf});
  EXPECT_EQ(str(buf), "q$");
}

TEST(BwtInplace, Abaab) {
  auto buf = sym("abaab$");
  bwt_inplace(std::span{buf});
  EXPECT_EQ(str(buf), "bba$aa");
}

TEST(BwtInplace, RejectsInvalidText) {
  Symbols empty;
  EXPECT_THROW(bwt_inplace(std::span{empty}), std::invalid_argument);
  auto unterminated = sym("ab");
  EXPECT_THROW(bwt_inplace(std::span{unterminated}), std::invalid_argument);
  auto two = sym("a$b$");
  EXPECT_THROW(bwt_inplace(std::span{two}), std::invalid_argument);
}

TEST(BwtInplace, TraceReportsEveryIteration) {
  auto buf = sym("BANANA$");
  std::vector<std::size_t> seen;
  bwt_inplace(std::span{buf}, [&](const IterationView<Symbol>& v) {
    seen.push_back(v.s);
    EXPECT_TRUE(v.ranks.empty());
    EXPECT_EQ(v.buffer[v.r_abs()], kSentinel);
  });
  EXPECT_EQ(seen, (std::vector<std::size_t>{5, 4, 3, 2, 1, 0}));
}

// Loop invariant: after iteration s the window is the BWT of T[s..].
TEST(BwtInplaceProperty, WindowIsSuffixBwtAfterEveryIteration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = testing::random_text(rng, 1, 64, trial % 2 ? 3 : 255);
    auto buf = text;
    bwt_inplace(std::span{buf}, [&](const IterationView<Symbol>& v) {
      const Symbols suffix(text.begin() + static_cast<std::ptrdiff_t>(v.s), text.end());
      const Symbols window(v.buffer.begin() + static_cast<std::ptrdiff_t>(v.s), v.buffer.end());
      ASSERT_EQ(window, oracle_bwt(suffix)) << "s=" << v.s;
    });
  }
}

TEST(BwtInplaceProperty, ExhaustiveBinaryAndTernary) {
  for (auto [sigma, len] : {std::pair<std::size_t, std::size_t>{2, 12}, {3, 9}}) {
    testing::for_each_text(sigma, len, [](const Symbols& text) {
      auto buf = text;
      bwt_inplace(std::span{buf});
      ASSERT_EQ(buf, oracle_bwt(text)) << str(text);
    });
  }
}

TEST(BwtInplaceProperty, RandomWideSymbolsAndPermutation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = testing::random_text(rng, 1, 200, trial % 2 ? (Symbol{1} << 31) : 255);
    auto buf = text;
    bwt_inplace(std::span{buf});
    ASSERT_EQ(buf, oracle_bwt(text));
    auto a = text;
    auto b = buf;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b);
  }
}

TEST(BwtInplaceProperty, NarrowSymbolType) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto text = testing::random_text(rng, 1, 100, 60000);
    std::vector<std::uint16_t> narrow(text.begin(), text.end());
    bwt_inplace(std::span{narrow});
    const auto expected = oracle_bwt(text);
    ASSERT_TRUE(std::equal(narrow.begin(), narrow.end(), expected.begin(), expected.end()));
  }
}

// The fused scan must agree with the literal find-then-count form.
TEST(BwtInplaceProperty, FusedScanMatchesTwoScans) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = testing::random_text(rng, 2, 80, 4);
    auto fused = text;
    auto literal = text;
    const std::size_t n = text.size();
    for (std::size_t s = n - 1; s-- > 0;) {
      const auto [p, r] = locate_and_rank(std::span{fused}, s);
      insert_and_shift(std::span{fused}, s, p, s + r);

      const std::size_t p2 = find_sentinel(std::span{literal}, s);
      const std::size_t r2 = compute_rank(std::span{literal}, s, p2);
      insert_and_shift(std::span{literal}, s, p2, s + r2);

      ASSERT_EQ(p, p2);
      ASSERT_EQ(r, r2);
      ASSERT_EQ(fused, literal);
    }
    ASSERT_EQ(fused, oracle_bwt(text));
  }
}

TEST(ComputeRank, OneComparisonPerWindowSymbol) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    auto buf = testing::random_text(rng, 2, 100, 5);
    const std::size_t n = buf.size();
    for (std::size_t s = n - 1; s-- > 0;) {
      std::size_t calls = 0;
      const std::size_t p = find_sentinel(std::span{buf}, s);
      const std::size_t r = compute_rank(std::span{buf}, s, p, CountingLess{&calls});
      ASSERT_EQ(calls, n - 1 - s);

      calls = 0;
      const auto fused = locate_and_rank(std::span{buf}, s, CountingLess{&calls});
      ASSERT_EQ(calls, n - 1 - s);
      ASSERT_EQ(fused.r_local, r);
      insert_and_shift(std::span{buf}, s, p, s + r);
    }
  }
}

TEST(BwtInplace, CustomComparatorReversesOrderOfNonSentinels) {
  // A comparator that keeps the sentinel smallest but reverses the rest
  // must match the oracle on the mirrored alphabet.
  auto rev = [](Symbol a, Symbol b) {
    if (a == kSentinel || b == kSentinel) return a == kSentinel && b != kSentinel;
    return a > b;
  };
  auto buf = sym("abaab$");
  bwt_inplace(std::span{buf}, NoTrace{}, rev);
  // Mirror a<->b: "babba$" has BWT computed by the oracle, mirrored back.
  auto mirrored = oracle_bwt(sym("babba$"));
  for (auto& x : mirrored) x = x == 'a' ? 'b' : x == 'b' ? 'a' : x;
  EXPECT_EQ(buf, mirrored);
}

}  // namespace
}  // namespace bwtlyndon

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

#include "bwtlyndon/verify.hpp"

#include "bwtlyndon/oracles.hpp"

namespace bwtlyndon {

namespace {

template <class T, class U>
std::optional<Mismatch> first_difference(const char* what, std::span<const T> expected, std::span<const U> actual) {
  if (expected.size() != actual.size()) {
    return Mismatch{std::string(what) + " length", 0, expected.size(), actual.size()};
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != actual[i]) return Mismatch{what, i, expected[i], actual[i]};
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const Mismatch& mismatch) {
  return mismatch.what + " mismatch at index " + std::to_string(mismatch.index) + ": expected " +
         std::to_string(mismatch.expected) + ", got " + std::to_string(mismatch.actual);
}

std::optional<Mismatch> verify_against_oracles(std::span<const Symbol> text, std::span<const Symbol> bwt,
                                               std::span<const std::size_t> la) {
  const auto sa = oracle::suffix_array_naive(text);
  const auto expected_bwt = oracle::bwt_from_sa(text, sa);
  if (auto m = first_difference<Symbol, Symbol>("bwt", expected_bwt, bwt)) return m;

  const auto expected_la = oracle::la_from_isa_nsv(oracle::isa_from_sa(sa));
  if (auto m = first_difference<std::size_t, std::size_t>("la (nsv)", expected_la, la)) return m;

  const auto duval_la = oracle::la_duval(text);
  return first_difference<std::size_t, std::size_t>("la (duval)", duval_la, la);
}

}  // namespace bwtlyndon

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

#ifndef BWTLYNDON_BENCH_HPP
#define BWTLYNDON_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bwtlyndon {

struct BenchConfig {
  std::size_t min_n = 1024;
  std::size_t max_n = 16384;
  std::size_t points = 5;
  std::size_t trials = 3;
  std::uint64_t seed = 20260101;
};

struct BenchPoint {
  std::size_t n = 0;  // random payload bytes; the text adds one sentinel
  double median_seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchPoint> points;
  double slope = 0.0;
};

/// `points` sizes from min_n to max_n, evenly spaced in log scale, rounded
/// and deduplicated.
std::vector<std::size_t> geometric_sizes(std::size_t min_n, std::size_t max_n, std::size_t points);

/// Least-squares slope of log(median_seconds) against log(n).
double loglog_slope(std::span<const BenchPoint> points);

/// Times bwt_lyndon_inplace on random byte texts. Trials run sequentially.
BenchReport run_bench(const BenchConfig& config);

/// "n,median_seconds" rows followed by a "# loglog_slope=<value>" line.
std::string bench_csv(const BenchReport& report);

}  // namespace bwtlyndon

#endif  // BWTLYNDON_BENCH_HPP

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

#include "bwtlyndon/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "bwtlyndon/alphabet.hpp"
#include "bwtlyndon/lyndon.hpp"

namespace bwtlyndon {

std::vector<std::size_t> geometric_sizes(std::size_t min_n, std::size_t max_n, std::size_t points) {
  if (min_n == 0 || max_n < min_n || points == 0) {
    throw std::invalid_argument("bench sizes need 0 < min <= max and at least one point");
  }
  std::vector<std::size_t> sizes;
  if (points == 1) return {min_n};
  const double ratio = static_cast<double>(max_n) / static_cast<double>(min_n);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(points - 1);
    const auto n = static_cast<std::size_t>(std::llround(static_cast<double>(min_n) * std::pow(ratio, t)));
    if (sizes.empty() || sizes.back() != n) sizes.push_back(n);
  }
  return sizes;
}

double loglog_slope(std::span<const BenchPoint> points) {
  if (points.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& pt : points) {
    const double x = std::log(static_cast<double>(pt.n));
    const double y = std::log(pt.median_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("bench needs at least one trial");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<unsigned> byte(0, 255);

  BenchReport report;
  for (const std::size_t n : geometric_sizes(config.min_n, config.max_n, config.points)) {
    std::vector<Symbol> original(n + 1);
    for (std::size_t i = 0; i < n; ++i) original[i] = Symbol{byte(rng)} + 1;
    original[n] = kSentinel;

    std::vector<Symbol> buffer(n + 1);
    std::vector<std::size_t> ranks(n + 1);
    std::vector<double> seconds;
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::copy(original.begin(), original.end(), buffer.begin());
      const auto start = std::chrono::steady_clock::now();
      bwt_lyndon_inplace(std::span<Symbol>(buffer), std::span<std::size_t>(ranks));
      const auto stop = std::chrono::steady_clock::now();
      seconds.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(seconds.begin(), seconds.end());
    const std::size_t mid = seconds.size() / 2;
    const double median = seconds.size() % 2 ? seconds[mid] : 0.5 * (seconds[mid - 1] + seconds[mid]);
    report.points.push_back({n, median});
  }
  report.slope = loglog_slope(report.points);
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::string out = "n,median_seconds\n";
  char line[64];
  for (const auto& pt : report.points) {
    std::snprintf(line, sizeof line, "%zu,%.9f\n", pt.n, pt.median_seconds);
    out += line;
  }
  std::snprintf(line, sizeof line, "# loglog_slope=%.4f\n", report.slope);
  out += line;
  return out;
}

}  // namespace bwtlyndon

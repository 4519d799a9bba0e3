#pragma once

// Decode-time scaling harness: random dense scores per length, timed
// decodes, and a log-log least-squares fit of time against length.

#include <cstdint>
#include <vector>

#include "spandep/core.hpp"

namespace spandep {

struct BenchPoint {
  int n = 0;
  double mean_seconds = 0.0;
  int repeats = 0;
};

struct BenchResult {
  Algorithm algorithm;
  std::vector<BenchPoint> points;
  double slope = 0.0;  // fitted exponent
};

// `repeats` is a floor; short runs repeat more (total >= ~50ms per length)
// so small lengths do not drown in timer noise.
BenchResult run_bench(Algorithm a, const std::vector<int>& lengths, int repeats,
                      std::uint64_t seed, RootMode mode = RootMode::kSingle);

double fit_loglog_slope(const std::vector<BenchPoint>& points);

}  // namespace spandep

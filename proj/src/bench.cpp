#include "spandep/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "spandep/decode.hpp"

namespace spandep {

namespace {

ScoreSet random_dense(int n, Algorithm a, std::uint64_t seed) {
  ScoreSet s = zero_scores(n, a);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int h = 0; h <= n; ++h)
    for (int d = 1; d <= n; ++d)
      if (h != d) s.arc(h, d) = dist(rng);
  if (s.has_sib())
    for (int h = 0; h <= n; ++h) {
      for (int outer = 1; outer < h - 1; ++outer)
        for (int inner = outer + 1; inner < h; ++inner) s.sib(h, inner, outer) = dist(rng);
      for (int outer = h + 2; outer <= n; ++outer)
        for (int inner = h + 1; inner < outer; ++inner) s.sib(h, inner, outer) = dist(rng);
    }
  if (s.has_span())
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l)
        for (int r = h; r <= n; ++r) s.span(h, l, r) = dist(rng);
  if (s.has_left())
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l) s.left(h, l) = dist(rng);
  if (s.has_right())
    for (int h = 1; h <= n; ++h)
      for (int r = h; r <= n; ++r) s.right(h, r) = dist(rng);
  return s;
}

double time_once(Algorithm a, const ScoreSet& s, int n, RootMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  DecodeResult r = decode(a, s, n, mode);
  auto t1 = std::chrono::steady_clock::now();
  // keep the result alive so the decode cannot be elided
  volatile double sink = r.score;
  (void)sink;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

double fit_loglog_slope(const std::vector<BenchPoint>& points) {
  double sx = 0, sy = 0;
  const double m = double(points.size());
  for (const BenchPoint& p : points) {
    sx += std::log(double(p.n));
    sy += std::log(p.mean_seconds);
  }
  const double mx = sx / m, my = sy / m;
  double num = 0, den = 0;
  for (const BenchPoint& p : points) {
    double dx = std::log(double(p.n)) - mx;
    num += dx * (std::log(p.mean_seconds) - my);
    den += dx * dx;
  }
  return num / den;
}

BenchResult run_bench(Algorithm a, const std::vector<int>& lengths, int repeats,
                      std::uint64_t seed, RootMode mode) {
  if (lengths.size() < 2)
    throw std::invalid_argument("run_bench: need at least two lengths to fit a slope");
  BenchResult result;
  result.algorithm = a;
  for (int n : lengths) {
    if (n < 1) throw std::invalid_argument("run_bench: lengths must be >= 1");
    ScoreSet s = random_dense(n, a, seed ^ (std::uint64_t(n) * 0x9e3779b97f4a7c15ull));

    double first = time_once(a, s, n, mode);  // also warms caches
    int reps = std::max(repeats, 1);
    // pad short runs up to ~50ms of total measurement
    if (first * reps < 0.05)
      reps = std::min(2000, int(std::ceil(0.05 / std::max(first, 1e-7))));

    double total = 0.0;
    for (int i = 0; i < reps; ++i) total += time_once(a, s, n, mode);
    result.points.push_back({n, total / reps, reps});
  }
  result.slope = fit_loglog_slope(result.points);
  return result;
}

}  // namespace spandep

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmcc/instance.hpp"

namespace mmcc {

struct GeometricConfig {
  std::size_t n = 8;
  std::size_t m = 1;
  std::size_t k = 1;
  double epsilon = 0.25;
  std::uint64_t seed = 0;
};

/// Uniform points in the unit square with Euclidean weights. Depot i is the
/// free point nearest to corner i mod 4 (corners (0,0), (1,1), (0,1), (1,0)).
/// Throws std::invalid_argument unless 1 <= m <= n and k >= m.
MetricInstance random_geometric_instance(const GeometricConfig& config);

struct BenchConfig {
  std::vector<std::size_t> sizes{50, 100, 200, 400, 800};
  std::vector<std::size_t> depot_counts{3};
  std::optional<std::size_t> k;  // default: max(m, ceil(n / 10))
  double epsilon = 0.25;
  std::size_t instances = 3;  // seeds per (n, m)
  std::size_t repeats = 3;    // timed runs per instance; the fastest counts
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t candidates = 0;
  double iterations = 0.0;  // mean over instances
  double elapsed_ms = 0.0;  // mean over instances of the fastest repeat
  double objective = 0.0;   // mean over instances
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Log-log slope of time vs n at m = depot_counts[0] (needs >= 2 sizes).
  std::optional<double> size_slope;
  /// Geometric-mean time ratio per unit of m at n = sizes[0] (needs >= 2 depot counts).
  std::optional<double> depot_ratio;
};

/// Runs the solver over every (n, m) pair of the config.
BenchReport run_bench(const BenchConfig& config);

/// Least-squares slope of log(ys) against log(xs).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// n,m,k,candidates,iterations,elapsed_ms,objective, then "# ..." summary lines.
std::string bench_to_csv(const BenchReport& report);

}  // namespace mmcc

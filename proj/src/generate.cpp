#include "mmcc/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mmcc/planner.hpp"

namespace mmcc {

MetricInstance random_geometric_instance(const GeometricConfig& config) {
  if (config.m < 1 || config.m > config.n)
    throw std::invalid_argument("need 1 <= m <= n (m = " + std::to_string(config.m) +
                                ", n = " + std::to_string(config.n) + ")");
  if (config.k < config.m)
    throw std::invalid_argument("need k >= m (k = " + std::to_string(config.k) + ", m = " +
                                std::to_string(config.m) + ")");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::array<double, 2>> points(config.n);
  for (auto& p : points) {
    p[0] = unit(rng);
    p[1] = unit(rng);
  }

  static constexpr std::array<std::array<double, 2>, 4> corners{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  std::vector<Vertex> depots;
  std::vector<char> taken(config.n, 0);
  for (std::size_t i = 0; i < config.m; ++i) {
    const auto& corner = corners[i % corners.size()];
    std::size_t best = config.n;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < config.n; ++v) {
      if (taken[v]) continue;
      const double d = std::hypot(points[v][0] - corner[0], points[v][1] - corner[1]);
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
    taken[best] = 1;
    depots.push_back(static_cast<Vertex>(best));
  }

  WeightMatrix w(config.n);
  for (Vertex i = 0; i < config.n; ++i)
    for (Vertex j = i + 1; j < config.n; ++j)
      w.set_symmetric(i, j, std::hypot(points[i][0] - points[j][0], points[i][1] - points[j][1]));
  return MetricInstance(std::move(w), std::move(depots), config.k, config.epsilon);
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t count = std::min(xs.size(), ys.size());
  if (count < 2) throw std::invalid_argument("slope needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  std::uint64_t seed = config.seed;
  for (std::size_t m : config.depot_counts) {
    for (std::size_t n : config.sizes) {
      BenchRow row;
      row.n = n;
      row.m = m;
      row.k = config.k.value_or(std::max(m, (n + 9) / 10));
      const std::size_t instances = std::max<std::size_t>(config.instances, 1);
      for (std::size_t i = 0; i < instances; ++i) {
        const MetricInstance inst = random_geometric_instance({n, m, row.k, config.epsilon, seed++});
        double fastest = std::numeric_limits<double>::infinity();
        Solution last;
        for (std::size_t r = 0; r < std::max<std::size_t>(config.repeats, 1); ++r) {
          last = solve_unchecked(inst, {config.parallelism});
          fastest = std::min(fastest, last.stats.elapsed_ms);
        }
        row.candidates = last.stats.candidates;
        row.iterations += static_cast<double>(last.stats.iterations);
        row.elapsed_ms += fastest;
        row.objective += last.objective;
      }
      row.iterations /= static_cast<double>(instances);
      row.elapsed_ms /= static_cast<double>(instances);
      row.objective /= static_cast<double>(instances);
      report.rows.push_back(row);
    }
  }

  if (config.sizes.size() >= 2 && !config.depot_counts.empty()) {
    std::vector<double> xs, ys;
    for (const auto& row : report.rows) {
      if (row.m != config.depot_counts.front()) continue;
      xs.push_back(static_cast<double>(row.n));
      ys.push_back(row.elapsed_ms);
    }
    report.size_slope = loglog_slope(xs, ys);
  }
  if (config.depot_counts.size() >= 2 && !config.sizes.empty()) {
    const BenchRow* first = nullptr;
    const BenchRow* last = nullptr;
    for (const auto& row : report.rows) {
      if (row.n != config.sizes.front()) continue;
      if (!first || row.m < first->m) first = &row;
      if (!last || row.m > last->m) last = &row;
    }
    if (first && last && last->m > first->m)
      report.depot_ratio = std::pow(last->elapsed_ms / first->elapsed_ms,
                                    1.0 / static_cast<double>(last->m - first->m));
  }
  return report;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out.precision(6);
  out << "n,m,k,candidates,iterations,elapsed_ms,objective\n";
  for (const auto& r : report.rows)
    out << r.n << ',' << r.m << ',' << r.k << ',' << r.candidates << ',' << r.iterations << ','
        << r.elapsed_ms << ',' << r.objective << '\n';
  if (report.size_slope) out << "# size_slope," << *report.size_slope << '\n';
  if (report.depot_ratio) out << "# depot_ratio," << *report.depot_ratio << '\n';
  return out.str();
}

}  // namespace mmcc

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mmcc {

/// Dense vertex index in [0, n).
using Vertex = std::uint32_t;

/// Undirected weighted edge.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Row-major n x n matrix of edge weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  double operator()(Vertex i, Vertex j) const noexcept { return data_[std::size_t{i} * n_ + j]; }
  double& at(Vertex i, Vertex j) noexcept { return data_[std::size_t{i} * n_ + j]; }

  void set_symmetric(Vertex i, Vertex j, double w) noexcept {
    at(i, j) = w;
    at(j, i) = w;
  }

  std::span<const double> row(Vertex i) const noexcept {
    return {data_.data() + std::size_t{i} * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Relative tolerance used for weight recomputation and metric checks.
inline constexpr double kRelativeTolerance = 1e-9;

bool approx_equal(double a, double b, double rel = kRelativeTolerance) noexcept;

}  // namespace mmcc

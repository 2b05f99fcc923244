#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mmcc/report.hpp"
#include "mmcc/types.hpp"

namespace mmcc {

/// Sparse graph of physically available paths between sites and depots.
struct RawSiteGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> depot_ids;
};

enum class VertexKind { depot, site };

/// Complete graph with a metric weight matrix, depot set, robot budget k and
/// search tolerance epsilon. Immutable; copies share the weight matrix.
///
/// Construction only checks what is needed to index the instance (depot ids in
/// range and distinct). Metric properties, k >= m and the epsilon range are
/// reported by validate_instance().
class MetricInstance {
 public:
  MetricInstance(WeightMatrix weights, std::vector<Vertex> depots, std::size_t k, double epsilon);

  std::size_t vertex_count() const noexcept { return weights_->size(); }
  std::size_t depot_count() const noexcept { return depots_.size(); }
  std::size_t robot_count() const noexcept { return k_; }
  double epsilon() const noexcept { return epsilon_; }

  const WeightMatrix& weights() const noexcept { return *weights_; }
  double weight(Vertex u, Vertex v) const noexcept { return (*weights_)(u, v); }

  /// Depots in ascending id order.
  std::span<const Vertex> depots() const noexcept { return depots_; }
  /// Non-depot vertices in ascending id order.
  std::span<const Vertex> sites() const noexcept { return sites_; }

  bool is_depot(Vertex v) const noexcept { return depot_flag_[v] != 0; }
  VertexKind kind(Vertex v) const noexcept { return is_depot(v) ? VertexKind::depot : VertexKind::site; }

  /// Largest entry of the weight matrix.
  double max_weight() const noexcept { return max_weight_; }

  MetricInstance with_epsilon(double epsilon) const;
  MetricInstance with_robot_count(std::size_t k) const;

 private:
  std::shared_ptr<const WeightMatrix> weights_;
  std::vector<Vertex> depots_;
  std::vector<Vertex> sites_;
  std::vector<char> depot_flag_;
  std::size_t k_;
  double epsilon_;
  double max_weight_ = 0.0;
};

/// Structural checks on a raw graph: id ranges, self-loops, weight signs.
ValidationReport validate_raw_graph(const RawSiteGraph& raw);

/// All-pairs shortest-path distances of `raw` (Dijkstra from every vertex).
/// Throws ValidationError for structurally invalid graphs and
/// DisconnectedGraph if some pair is unreachable.
WeightMatrix metric_closure(const RawSiteGraph& raw);

/// Lists every violated instance invariant; empty iff the instance is valid.
/// Metric checks use kRelativeTolerance. At most a handful of witnesses are
/// recorded per violation kind, followed by a summary count.
ValidationReport validate_instance(const MetricInstance& inst);

}  // namespace mmcc

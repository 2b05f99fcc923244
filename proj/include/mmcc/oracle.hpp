#pragma once

#include <cstddef>
#include <span>

#include "mmcc/cyclegen.hpp"
#include "mmcc/instance.hpp"
#include "mmcc/planner.hpp"

namespace mmcc {

/// Largest number of non-depot vertices exact_solve accepts.
inline constexpr std::size_t kMaxOracleSites = 9;
/// Largest vertex set (root included) the exact TSP routines accept.
inline constexpr std::size_t kMaxTspVertices = 10;

struct ExactSolution {
  double lambda_star = 0.0;
  CycleCover cover;
};

/// Exact min-max rooted cycle cover by exhaustion.
///
/// Strict rule: every partition of the sites into at most k groups (restricted
/// growth strings) is tried with every assignment of groups to depots; depots
/// left without a group cost one zero-weight cycle each. Per-group costs come
/// from a Held-Karp table per depot.
///
/// Relaxed rule: partitions of all vertices; a block holding depots is routed
/// from its lowest depot, a depot-free block from its cheapest depot. Limited
/// to kMaxTspVertices vertices.
///
/// Throws InstanceTooLarge above the guards and NoFeasibleSolution when k < m.
ExactSolution exact_solve(const MetricInstance& inst, DepotRule rule = DepotRule::strict);

/// Minimum-weight closed route from `root` through exactly `vertices` (root
/// added if absent). Held-Karp; ties resolve toward lower vertex ids.
Cycle exact_tsp_cycle(std::span<const Vertex> vertices, Vertex root, const MetricInstance& inst);

/// Same contract as exact_tsp_cycle, by enumerating every visiting order.
Cycle permutation_tsp_cycle(std::span<const Vertex> vertices, Vertex root,
                            const MetricInstance& inst);

}  // namespace mmcc

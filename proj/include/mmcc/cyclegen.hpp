#pragma once

#include <span>
#include <vector>

#include "mmcc/decompose.hpp"
#include "mmcc/instance.hpp"

namespace mmcc {

/// Closed route [root, v1, ..., vr, root]. The single-vertex route [root]
/// stands for a robot that stays at its depot.
struct Cycle {
  Vertex root = 0;
  std::vector<Vertex> route;
  double weight = 0.0;
};

struct CycleCover {
  std::vector<Cycle> cycles;
  double max_weight = 0.0;

  std::size_t size() const noexcept { return cycles.size(); }
};

/// Sum of consecutive-pair weights, accumulated front to back.
double route_weight(std::span<const Vertex> route, const MetricInstance& inst);

/// Trees that contain a depot are rooted at their lowest-id depot. Depot-less
/// trees gain the lightest edge (d, v), d a depot and v a tree vertex (ties by
/// lowest d, then lowest v), and are rooted at d.
std::vector<Tree> attach_depots(const DecomposedForest& forest, const MetricInstance& inst);

/// Depth-first walk from the root, children in ascending id order, keeping the
/// first visit of each covered vertex and closing back at the root.
/// Throws PreconditionViolation if the tree is not rooted at a depot.
Cycle tree_to_cycle(const Tree& tree, const MetricInstance& inst);

/// attach_depots followed by tree_to_cycle on every tree.
CycleCover cover_from_forest(const DecomposedForest& forest, const MetricInstance& inst);

}  // namespace mmcc

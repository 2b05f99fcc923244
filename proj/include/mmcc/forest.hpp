#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmcc/instance.hpp"
#include "mmcc/types.hpp"

namespace mmcc {

/// A tree over a subset of the vertices.
///
/// Trees produced by splitting may carry an `anchor`: a single vertex the tree
/// passes through but does not cover, because another subtree covers it. Every
/// other vertex in `vertices` is covered by this tree.
struct Tree {
  std::optional<Vertex> root;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;  // sorted ascending
  std::optional<Vertex> anchor;
  double weight = 0.0;

  /// Builds a tree from its edges; `vertices` is derived (plus the root, for
  /// edgeless trees) and `weight` is the edge-weight sum.
  static Tree from_edges(std::optional<Vertex> root, std::vector<Edge> edges,
                         std::vector<Vertex> extra_vertices = {});

  bool contains(Vertex v) const noexcept;
  bool covers(Vertex v) const noexcept { return contains(v) && anchor != v; }
  std::vector<Vertex> covered_vertices() const;
  double max_edge_weight() const noexcept;
};

struct RootedForest {
  std::vector<Tree> trees;

  std::size_t size() const noexcept { return trees.size(); }
  double total_weight() const noexcept;
  double max_edge_weight() const noexcept;
  double max_tree_weight() const noexcept;
};

/// Edges joining the trees of F* into one spanning tree, in selection order.
struct ConnectorEdgeSet {
  std::vector<Edge> edges;
};

/// F* merged along a subset of the connector edges. `id` is the subset
/// bitmask (bit i selects connector i).
struct ForestCandidate {
  std::uint64_t id = 0;
  std::vector<std::size_t> selected_connectors;
  RootedForest forest;
};

/// Minimum rooted spanning forest: all depots are collapsed into one node,
/// Prim's algorithm runs on the collapsed graph, and each collapsed edge is
/// re-attached to the nearest depot (lowest id on ties). Exactly one tree per
/// depot, ordered by depot id.
///
/// Prim ties are broken by the (min endpoint, max endpoint) pair, with the
/// collapsed node ranked below every real vertex.
RootedForest build_rooted_spanning_forest(const MetricInstance& inst);

/// Greedy connector selection: repeatedly take the globally lightest edge
/// joining two distinct trees, ties by (weight, min id, max id). m - 1 edges.
ConnectorEdgeSet build_connector_edges(const MetricInstance& inst, const RootedForest& fstar);

/// 2^(|connectors|).
std::uint64_t candidate_count(const ConnectorEdgeSet& conn);

/// The candidate for one subset bitmask. Merged trees are rooted at their
/// lowest-id depot; trees are ordered by root.
ForestCandidate make_candidate(const RootedForest& fstar, const ConnectorEdgeSet& conn,
                               std::uint64_t mask);

/// All candidates in ascending bitmask order.
std::vector<ForestCandidate> enumerate_candidates(const RootedForest& fstar,
                                                  const ConnectorEdgeSet& conn);

}  // namespace mmcc

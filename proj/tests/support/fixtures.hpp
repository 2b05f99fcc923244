#pragma once

// Independent reference computations and random generators for the tests.
// Nothing here calls the algorithms under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mmcc/forest.hpp"
#include "mmcc/instance.hpp"

namespace mmcc::testing {

using Rng = std::mt19937_64;

/// Points on a line with |x_i - x_j| weights.
MetricInstance line_instance(const std::vector<double>& positions, std::vector<Vertex> depots,
                             std::size_t k, double epsilon = 0.25);

/// The four-vertex line 0-1-2-3 with depots {0, 3} and k = 2.
MetricInstance line4();

/// All-pairs shortest paths by Floyd-Warshall; +inf for unreachable pairs.
std::vector<std::vector<double>> floyd_warshall(const RawSiteGraph& raw);

/// Connected random sparse graph: a random spanning tree plus extra edges.
RawSiteGraph random_sparse_graph(Rng& rng, std::size_t n, std::size_t extra_edges,
                                 std::size_t depot_count, bool integer_weights);

enum class MetricFamily { euclidean, graph_closure, integer_closure, line, clustered };

/// Random metric instance from the chosen family. Depots are a random subset.
MetricInstance random_instance(Rng& rng, MetricFamily family, std::size_t n, std::size_t m,
                               std::size_t k, double epsilon = 0.25);

/// Cycles through the families by index.
MetricFamily family_for(std::size_t index);

/// Minimum total weight over all spanning forests in which every tree holds
/// exactly one depot: every site-to-depot assignment, each group spanned by
/// a Kruskal MST.
double exhaustive_min_rooted_forest(const MetricInstance& inst);

/// Kruskal MST weight over the given vertices of the instance.
double kruskal_weight(const std::vector<Vertex>& vertices, const MetricInstance& inst);

/// Shortest closed walk from `root` through `others` by trying every order.
double brute_tsp(Vertex root, std::vector<Vertex> others, const MetricInstance& inst);

/// Min-max cover under "exactly one depot per cycle" by labelling every site
/// with a cycle slot and every slot with a depot. Small instances only.
double brute_min_max_cover(const MetricInstance& inst);

/// Random tree on n vertices (random parent for each vertex) with weights
/// drawn from the chosen shape. Vertex ids are shuffled.
Tree random_tree(Rng& rng, std::size_t n);

/// Split postconditions: count bound, piece weights, covered-vertex partition,
/// edge subset. Returns human-readable failures.
std::vector<std::string> check_split(const Tree& input, double lambda,
                                     const std::vector<Tree>& pieces);

/// True if the edges form one tree spanning exactly `vertices`.
bool is_spanning_tree(const std::vector<Edge>& edges, const std::vector<Vertex>& vertices);

}  // namespace mmcc::testing

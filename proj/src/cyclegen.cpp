#include "mmcc/cyclegen.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "mmcc/errors.hpp"

namespace mmcc {

double route_weight(std::span<const Vertex> route, const MetricInstance& inst) {
  double total = 0.0;
  for (std::size_t i = 1; i < route.size(); ++i) total += inst.weight(route[i - 1], route[i]);
  return total;
}

std::vector<Tree> attach_depots(const DecomposedForest& forest, const MetricInstance& inst) {
  std::vector<Tree> out;
  out.reserve(forest.subtrees.size());
  for (const Tree& t : forest.subtrees) {
    auto depot = std::find_if(t.vertices.begin(), t.vertices.end(),
                              [&](Vertex v) { return inst.is_depot(v); });
    if (depot != t.vertices.end()) {
      Tree rooted = t;
      rooted.root = *depot;
      out.push_back(std::move(rooted));
      continue;
    }
    std::tuple<double, Vertex, Vertex> best{std::numeric_limits<double>::infinity(), 0, 0};
    for (Vertex d : inst.depots())
      for (Vertex v : t.vertices) best = std::min(best, std::tuple{inst.weight(d, v), d, v});
    const auto [w, d, v] = best;
    std::vector<Edge> edges = t.edges;
    edges.push_back({d, v, w});
    Tree attached = Tree::from_edges(d, std::move(edges), t.vertices);
    attached.anchor = t.anchor;
    out.push_back(std::move(attached));
  }
  return out;
}

Cycle tree_to_cycle(const Tree& tree, const MetricInstance& inst) {
  if (!tree.root || *tree.root >= inst.vertex_count() || !inst.is_depot(*tree.root))
    throw PreconditionViolation("tree_to_cycle needs a tree rooted at a depot");
  const Vertex root = *tree.root;

  const auto& verts = tree.vertices;
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::vector<std::size_t>> children(verts.size());
  for (const Edge& e : tree.edges) {
    children[local(e.u)].push_back(local(e.v));
    children[local(e.v)].push_back(local(e.u));
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  Cycle cycle;
  cycle.root = root;
  cycle.route.push_back(root);
  std::vector<char> visited(verts.size(), 0);
  std::vector<std::size_t> stack{local(root)};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (visited[u]) continue;
    visited[u] = 1;
    if (verts[u] != root && tree.anchor != verts[u]) cycle.route.push_back(verts[u]);
    for (auto it = children[u].rbegin(); it != children[u].rend(); ++it)
      if (!visited[*it]) stack.push_back(*it);
  }
  if (cycle.route.size() > 1) cycle.route.push_back(root);
  cycle.weight = route_weight(cycle.route, inst);
  return cycle;
}

CycleCover cover_from_forest(const DecomposedForest& forest, const MetricInstance& inst) {
  CycleCover cover;
  for (const Tree& t : attach_depots(forest, inst)) {
    cover.cycles.push_back(tree_to_cycle(t, inst));
    cover.max_weight = std::max(cover.max_weight, cover.cycles.back().weight);
  }
  return cover;
}

}  // namespace mmcc

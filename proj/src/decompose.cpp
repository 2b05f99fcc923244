#include "mmcc/decompose.hpp"

#include <algorithm>
#include <string>

#include "mmcc/errors.hpp"

namespace mmcc {

namespace {

void check_lambda(double lambda, double max_edge) {
  if (!(lambda > 0.0))
    throw PreconditionViolation("lambda must be positive, got " + std::to_string(lambda));
  if (lambda < max_edge)
    throw PreconditionViolation("lambda = " + std::to_string(lambda) +
                                " is below the heaviest tree edge " + std::to_string(max_edge));
}

struct Branch {
  std::size_t child;
  double weight;  // residual subtree of the child plus the connecting edge
};

}  // namespace

std::vector<Tree> split_tree(const Tree& tree, double lambda) {
  check_lambda(lambda, tree.max_edge_weight());
  if (tree.weight < 2.0 * lambda) return {tree};

  const auto& verts = tree.vertices;
  const std::size_t count = verts.size();
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };

  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(count);
  for (const Edge& e : tree.edges) {
    adjacency[local(e.u)].emplace_back(local(e.v), e.weight);
    adjacency[local(e.v)].emplace_back(local(e.u), e.weight);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  const Vertex root_vertex = tree.anchor ? *tree.anchor : tree.root ? *tree.root : verts.front();
  const std::size_t root = local(root_vertex);

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(count, none);
  std::vector<double> parent_weight(count, 0.0);
  std::vector<std::size_t> preorder;
  preorder.reserve(count);
  {
    std::vector<std::size_t> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      preorder.push_back(u);
      for (auto it = adjacency[u].rbegin(); it != adjacency[u].rend(); ++it) {
        if (parent[it->first] != none) continue;
        parent[it->first] = u;
        parent_weight[it->first] = it->second;
        stack.push_back(it->first);
      }
    }
  }

  std::vector<char> detached(count, 0);
  std::vector<double> residual(count, 0.0);
  std::vector<Tree> pieces;
  double remaining = tree.weight;
  bool stopped = false;

  // Moves the residual subtree below `child` plus the edge to its parent into `out`.
  auto take_branch = [&](std::size_t child, std::vector<Edge>& out) {
    out.push_back({verts[parent[child]], verts[child], parent_weight[child]});
    std::vector<std::size_t> stack{child};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      detached[u] = 1;
      for (auto [c, w] : adjacency[u]) {
        if (c == parent[u] || parent[c] != u || detached[c]) continue;
        out.push_back({verts[u], verts[c], w});
        stack.push_back(c);
      }
    }
  };

  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const std::size_t v = *it;
    std::vector<Branch> branches;
    double pending = 0.0;
    for (auto [c, w] : adjacency[v]) {
      if (c == parent[v] || parent[c] != v || detached[c]) continue;
      branches.push_back({c, residual[c] + w});
      pending += residual[c] + w;
    }

    while (!stopped && pending >= lambda) {
      if (remaining < 2.0 * lambda) {
        stopped = true;
        break;
      }
      // A single branch of weight >= lambda goes alone; otherwise branches are
      // accumulated in id order until the group reaches lambda.
      std::vector<std::size_t> group;
      double group_weight = 0.0;
      for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].weight >= lambda) {
          group = {i};
          group_weight = branches[i].weight;
          break;
        }
      }
      if (group.empty()) {
        for (std::size_t i = 0; i < branches.size() && group_weight < lambda; ++i) {
          group.push_back(i);
          group_weight += branches[i].weight;
        }
      }

      std::vector<Edge> edges;
      for (std::size_t i : group) take_branch(branches[i].child, edges);
      Tree piece = Tree::from_edges(std::nullopt, std::move(edges));
      piece.anchor = verts[v];
      pieces.push_back(std::move(piece));

      for (auto g = group.rbegin(); g != group.rend(); ++g)
        branches.erase(branches.begin() + static_cast<std::ptrdiff_t>(*g));
      pending -= group_weight;
      remaining -= group_weight;
    }
    residual[v] = pending;
  }

  std::vector<Edge> rest;
  for (std::size_t u : preorder)
    if (u != root && !detached[u]) rest.push_back({verts[parent[u]], verts[u], parent_weight[u]});

  std::vector<Tree> out;
  if (rest.empty()) {
    // Only the root is left. Hand it to a subtree anchored there instead of
    // emitting a weightless extra subtree.
    if (tree.anchor != root_vertex) {
      auto owner = std::find_if(pieces.begin(), pieces.end(),
                                [&](const Tree& p) { return p.anchor == root_vertex; });
      if (owner != pieces.end()) {
        owner->anchor.reset();
        if (tree.root == root_vertex) owner->root = root_vertex;
      } else {
        out.push_back(Tree::from_edges(tree.root, {}, {root_vertex}));
      }
    }
  } else {
    Tree remainder = Tree::from_edges(std::nullopt, std::move(rest));
    if (tree.root && remainder.contains(*tree.root)) remainder.root = tree.root;
    remainder.anchor = tree.anchor;
    out.push_back(std::move(remainder));
  }
  for (auto& p : pieces) out.push_back(std::move(p));
  return out;
}

DecomposedForest decompose_forest(const ForestCandidate& cand, double lambda) {
  check_lambda(lambda, cand.forest.max_edge_weight());
  DecomposedForest out;
  out.lambda = lambda;
  out.origin = cand.id;
  for (const Tree& t : cand.forest.trees) {
    if (t.weight < 2.0 * lambda) {
      out.subtrees.push_back(t);
    } else {
      auto parts = split_tree(t, lambda);
      std::move(parts.begin(), parts.end(), std::back_inserter(out.subtrees));
    }
  }
  return out;
}

}  // namespace mmcc

#include "mmcc/forest.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace mmcc {

Tree Tree::from_edges(std::optional<Vertex> root, std::vector<Edge> edges,
                      std::vector<Vertex> extra_vertices) {
  Tree t;
  t.root = root;
  t.vertices = std::move(extra_vertices);
  if (root) t.vertices.push_back(*root);
  for (const Edge& e : edges) {
    t.vertices.push_back(e.u);
    t.vertices.push_back(e.v);
    t.weight += e.weight;
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  t.edges = std::move(edges);
  return t;
}

bool Tree::contains(Vertex v) const noexcept {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<Vertex> Tree::covered_vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices)
    if (anchor != v) out.push_back(v);
  return out;
}

double Tree::max_edge_weight() const noexcept {
  double best = 0.0;
  for (const Edge& e : edges) best = std::max(best, e.weight);
  return best;
}

double RootedForest::total_weight() const noexcept {
  double sum = 0.0;
  for (const Tree& t : trees) sum += t.weight;
  return sum;
}

double RootedForest::max_edge_weight() const noexcept {
  double best = 0.0;
  for (const Tree& t : trees) best = std::max(best, t.max_edge_weight());
  return best;
}

double RootedForest::max_tree_weight() const noexcept {
  double best = 0.0;
  for (const Tree& t : trees) best = std::max(best, t.weight);
  return best;
}

namespace {

// Tie-break key for a candidate edge: (weight, smaller endpoint, larger endpoint).
// The collapsed depot node is encoded as -1 so it sorts below every vertex.
using EdgeKey = std::tuple<double, long long, long long>;

constexpr long long kCollapsed = -1;

EdgeKey site_key(double w, Vertex a, Vertex b) {
  return {w, std::min<long long>(a, b), std::max<long long>(a, b)};
}

}  // namespace

RootedForest build_rooted_spanning_forest(const MetricInstance& inst) {
  const auto depots = inst.depots();
  const auto sites = inst.sites();
  const std::size_t s = sites.size();

  // Nearest depot of each site; lowest id wins ties since depots are ascending.
  std::vector<Vertex> nearest(s);
  std::vector<double> nearest_w(s, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < s; ++i) {
    for (Vertex d : depots) {
      const double w = inst.weight(d, sites[i]);
      if (w < nearest_w[i]) {
        nearest_w[i] = w;
        nearest[i] = d;
      }
    }
  }

  // Prim on the collapsed graph, grown from the collapsed node. Initially every
  // site hangs off the collapsed node.
  std::vector<EdgeKey> key(s);
  std::vector<Vertex> parent(s);
  std::vector<char> in_tree(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    key[i] = {nearest_w[i], kCollapsed, sites[i]};
    parent[i] = nearest[i];
  }

  std::vector<Edge> edges;
  edges.reserve(s);
  for (std::size_t step = 0; step < s; ++step) {
    std::size_t pick = s;
    for (std::size_t i = 0; i < s; ++i)
      if (!in_tree[i] && (pick == s || key[i] < key[pick])) pick = i;
    in_tree[pick] = 1;
    const Vertex v = sites[pick];
    edges.push_back({parent[pick], v, std::get<0>(key[pick])});
    const auto row = inst.weights().row(v);
    for (std::size_t i = 0; i < s; ++i) {
      if (in_tree[i]) continue;
      const EdgeKey candidate = site_key(row[sites[i]], v, sites[i]);
      if (candidate < key[i]) {
        key[i] = candidate;
        parent[i] = v;
      }
    }
  }

  // Split the edge set into one tree per depot.
  const std::size_t n = inst.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  RootedForest forest;
  std::vector<char> seen(n, 0);
  for (Vertex d : depots) {
    std::vector<Edge> tree_edges;
    std::vector<Vertex> stack{d};
    seen[d] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (std::size_t e : incident[u]) {
        const Vertex other = edges[e].u == u ? edges[e].v : edges[e].u;
        if (seen[other]) continue;
        seen[other] = 1;
        tree_edges.push_back(edges[e]);
        stack.push_back(other);
      }
    }
    forest.trees.push_back(Tree::from_edges(d, std::move(tree_edges)));
  }
  return forest;
}

ConnectorEdgeSet build_connector_edges(const MetricInstance& inst, const RootedForest& fstar) {
  const std::size_t n = inst.vertex_count();
  std::vector<std::size_t> label(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t t = 0; t < fstar.trees.size(); ++t)
    for (Vertex v : fstar.trees[t].vertices) label[v] = t;

  ConnectorEdgeSet conn;
  const std::size_t rounds = fstar.trees.empty() ? 0 : fstar.trees.size() - 1;
  for (std::size_t round = 0; round < rounds; ++round) {
    EdgeKey best{std::numeric_limits<double>::infinity(), 0, 0};
    bool found = false;
    for (Vertex i = 0; i < n; ++i) {
      const auto row = inst.weights().row(i);
      for (Vertex j = i + 1; j < n; ++j) {
        if (label[i] == label[j]) continue;
        const EdgeKey candidate{row[j], i, j};
        if (!found || candidate < best) {
          best = candidate;
          found = true;
        }
      }
    }
    const auto u = static_cast<Vertex>(std::get<1>(best));
    const auto v = static_cast<Vertex>(std::get<2>(best));
    conn.edges.push_back({u, v, std::get<0>(best)});
    const std::size_t from = label[v];
    const std::size_t to = label[u];
    for (auto& l : label)
      if (l == from) l = to;
  }
  return conn;
}

std::uint64_t candidate_count(const ConnectorEdgeSet& conn) {
  if (conn.edges.size() >= 63) throw std::length_error("too many depots to enumerate candidates");
  return std::uint64_t{1} << conn.edges.size();
}

ForestCandidate make_candidate(const RootedForest& fstar, const ConnectorEdgeSet& conn,
                               std::uint64_t mask) {
  const std::size_t t = fstar.trees.size();
  Vertex max_vertex = 0;
  for (const Tree& tree : fstar.trees)
    if (!tree.vertices.empty()) max_vertex = std::max(max_vertex, tree.vertices.back());
  std::vector<std::size_t> tree_of(std::size_t{max_vertex} + 1, 0);
  for (std::size_t i = 0; i < t; ++i)
    for (Vertex v : fstar.trees[i].vertices) tree_of[v] = i;

  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  ForestCandidate cand;
  cand.id = mask;
  for (std::size_t c = 0; c < conn.edges.size(); ++c) {
    if (!(mask >> c & 1U)) continue;
    cand.selected_connectors.push_back(c);
    const std::size_t a = find(tree_of[conn.edges[c].u]);
    const std::size_t b = find(tree_of[conn.edges[c].v]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  // Group by representative; F* trees are in ascending root order, so the
  // first tree of each group carries the group's lowest depot.
  std::vector<std::vector<std::size_t>> members(t);
  for (std::size_t i = 0; i < t; ++i) members[find(i)].push_back(i);
  std::vector<std::vector<Edge>> extra(t);
  for (std::size_t c : cand.selected_connectors)
    extra[find(tree_of[conn.edges[c].u])].push_back(conn.edges[c]);

  std::vector<Tree> trees;
  for (std::size_t g = 0; g < t; ++g) {
    if (members[g].empty()) continue;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    std::optional<Vertex> root;
    for (std::size_t i : members[g]) {
      const Tree& src = fstar.trees[i];
      edges.insert(edges.end(), src.edges.begin(), src.edges.end());
      vertices.insert(vertices.end(), src.vertices.begin(), src.vertices.end());
      if (src.root && (!root || *src.root < *root)) root = src.root;
    }
    edges.insert(edges.end(), extra[g].begin(), extra[g].end());
    trees.push_back(Tree::from_edges(root, std::move(edges), std::move(vertices)));
  }
  std::sort(trees.begin(), trees.end(),
            [](const Tree& a, const Tree& b) { return a.root < b.root; });
  cand.forest.trees = std::move(trees);
  return cand;
}

std::vector<ForestCandidate> enumerate_candidates(const RootedForest& fstar,
                                                  const ConnectorEdgeSet& conn) {
  const std::uint64_t count = candidate_count(conn);
  std::vector<ForestCandidate> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(make_candidate(fstar, conn, mask));
  return out;
}

}  // namespace mmcc

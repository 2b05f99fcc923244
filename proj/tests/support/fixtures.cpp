#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace mmcc::testing {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Vertex> random_depots(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(m);
  std::sort(ids.begin(), ids.end());
  return ids;
}

WeightMatrix closure_matrix(const RawSiteGraph& raw) {
  const auto d = floyd_warshall(raw);
  WeightMatrix w(raw.vertex_count);
  for (Vertex i = 0; i < raw.vertex_count; ++i)
    for (Vertex j = 0; j < raw.vertex_count; ++j) w.at(i, j) = d[i][j];
  return w;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

MetricInstance line_instance(const std::vector<double>& positions, std::vector<Vertex> depots,
                             std::size_t k, double epsilon) {
  WeightMatrix w(positions.size());
  for (Vertex i = 0; i < positions.size(); ++i)
    for (Vertex j = 0; j < positions.size(); ++j) w.at(i, j) = std::abs(positions[i] - positions[j]);
  return MetricInstance(std::move(w), std::move(depots), k, epsilon);
}

MetricInstance line4() { return line_instance({0, 1, 2, 3}, {0, 3}, 2); }

std::vector<std::vector<double>> floyd_warshall(const RawSiteGraph& raw) {
  const std::size_t n = raw.vertex_count;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : raw.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
  }
  for (std::size_t via = 0; via < n; ++via)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][via] + d[via][j] < d[i][j]) d[i][j] = d[i][via] + d[via][j];
  return d;
}

RawSiteGraph random_sparse_graph(Rng& rng, std::size_t n, std::size_t extra_edges,
                                 std::size_t depot_count, bool integer_weights) {
  RawSiteGraph raw;
  raw.vertex_count = n;
  std::uniform_real_distribution<double> real(0.05, 10.0);
  std::uniform_int_distribution<int> whole(1, 9);
  auto weight = [&] { return integer_weights ? double(whole(rng)) : real(rng); };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    raw.edges.push_back({order[pick(rng)], order[i], weight()});
  }
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
    for (std::size_t e = 0; e < extra_edges; ++e) {
      const Vertex u = any(rng);
      const Vertex v = any(rng);
      if (u != v) raw.edges.push_back({u, v, weight()});
    }
  }
  raw.depot_ids = random_depots(rng, n, depot_count);
  return raw;
}

MetricFamily family_for(std::size_t index) {
  static constexpr MetricFamily kAll[] = {MetricFamily::euclidean, MetricFamily::graph_closure,
                                          MetricFamily::integer_closure, MetricFamily::line,
                                          MetricFamily::clustered};
  return kAll[index % std::size(kAll)];
}

MetricInstance random_instance(Rng& rng, MetricFamily family, std::size_t n, std::size_t m,
                               std::size_t k, double epsilon) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightMatrix w(n);
  switch (family) {
    case MetricFamily::euclidean:
    case MetricFamily::clustered: {
      std::vector<std::pair<double, double>> pts(n);
      if (family == MetricFamily::euclidean) {
        for (auto& p : pts) p = {unit(rng), unit(rng)};
      } else {
        // A few tight clusters far apart stress the depot attachment step.
        std::uniform_int_distribution<int> which(0, 2);
        const std::pair<double, double> centres[] = {{0, 0}, {10, 0}, {0, 10}};
        for (auto& p : pts) {
          const auto c = centres[which(rng)];
          p = {c.first + 0.3 * unit(rng), c.second + 0.3 * unit(rng)};
        }
      }
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
          w.at(i, j) = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
      break;
    }
    case MetricFamily::graph_closure:
    case MetricFamily::integer_closure: {
      std::uniform_int_distribution<std::size_t> extra(0, n);
      w = closure_matrix(
          random_sparse_graph(rng, n, extra(rng), m, family == MetricFamily::integer_closure));
      break;
    }
    case MetricFamily::line: {
      std::uniform_int_distribution<int> pos(0, 20);
      std::vector<double> xs(n);
      for (double& x : xs) x = pos(rng);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) w.at(i, j) = std::abs(xs[i] - xs[j]);
      break;
    }
  }
  return MetricInstance(std::move(w), random_depots(rng, n, m), k, epsilon);
}

double kruskal_weight(const std::vector<Vertex>& vertices, const MetricInstance& inst) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      edges.emplace_back(inst.weight(vertices[i], vertices[j]), i, j);
  std::sort(edges.begin(), edges.end());
  Dsu dsu(vertices.size());
  double total = 0.0;
  for (const auto& [w, i, j] : edges)
    if (dsu.unite(i, j)) total += w;
  return total;
}

double exhaustive_min_rooted_forest(const MetricInstance& inst) {
  const auto depots = inst.depots();
  const auto sites = inst.sites();
  const std::size_t m = depots.size();
  std::vector<std::size_t> choice(sites.size(), 0);
  double best = kInf;
  while (true) {
    double total = 0.0;
    for (std::size_t d = 0; d < m; ++d) {
      std::vector<Vertex> group{depots[d]};
      for (std::size_t s = 0; s < sites.size(); ++s)
        if (choice[s] == d) group.push_back(sites[s]);
      total += kruskal_weight(group, inst);
    }
    best = std::min(best, total);
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == m) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return best;
}

double brute_tsp(Vertex root, std::vector<Vertex> others, const MetricInstance& inst) {
  if (others.empty()) return 0.0;
  std::sort(others.begin(), others.end());
  double best = kInf;
  do {
    double w = inst.weight(root, others.front()) + inst.weight(others.back(), root);
    for (std::size_t i = 0; i + 1 < others.size(); ++i) w += inst.weight(others[i], others[i + 1]);
    best = std::min(best, w);
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

double brute_min_max_cover(const MetricInstance& inst) {
  const auto depots = inst.depots();
  const auto sites = inst.sites();
  const std::size_t m = depots.size();
  const std::size_t k = inst.robot_count();
  const std::size_t s = sites.size();
  if (k < m) return kInf;
  if (s == 0) return 0.0;

  // cost[mask][d]: best closed walk from depot d through the sites in mask.
  std::vector<std::vector<double>> cost(std::size_t{1} << s, std::vector<double>(m, 0.0));
  for (std::size_t mask = 1; mask < cost.size(); ++mask) {
    std::vector<Vertex> group;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) group.push_back(sites[i]);
    for (std::size_t d = 0; d < m; ++d) cost[mask][d] = brute_tsp(depots[d], group, inst);
  }

  double best = kInf;
  std::vector<std::size_t> slot(s, 0);
  while (true) {
    std::vector<std::size_t> masks(k, 0);
    for (std::size_t i = 0; i < s; ++i) masks[slot[i]] |= std::size_t{1} << i;
    std::vector<std::size_t> used;
    for (std::size_t j = 0; j < k; ++j)
      if (masks[j]) used.push_back(j);
    // Every way of sending the used slots to depots.
    std::vector<std::size_t> depot_of(used.size(), 0);
    while (true) {
      std::vector<char> covered(m, 0);
      double worst = 0.0;
      for (std::size_t u = 0; u < used.size(); ++u) {
        covered[depot_of[u]] = 1;
        worst = std::max(worst, cost[masks[used[u]]][depot_of[u]]);
      }
      const auto idle = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 0));
      if (used.size() + idle <= k) best = std::min(best, worst);
      std::size_t pos = 0;
      while (pos < depot_of.size() && ++depot_of[pos] == m) depot_of[pos++] = 0;
      if (pos == depot_of.size()) break;
    }
    std::size_t pos = 0;
    while (pos < slot.size() && ++slot[pos] == k) slot[pos++] = 0;
    if (pos == slot.size()) break;
  }
  return best;
}

Tree random_tree(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> shape_pick(0, 3);
  std::uniform_int_distribution<int> weight_pick(0, 3);
  const int shape = shape_pick(rng);
  const int weights = weight_pick(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(0, 4);
  auto weight = [&]() -> double {
    switch (weights) {
      case 0: return unit(rng) + 0.01;
      case 1: return small(rng);  // includes zero weights
      case 2: return std::exp(4.0 * unit(rng));  // heavy tail
      default: return 1.0;
    }
  };

  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t parent = 0;
    switch (shape) {
      case 0: parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng); break;
      case 1: parent = i - 1; break;  // path
      case 2: parent = 0; break;      // star
      default: parent = (i - 1) / 2; break;  // binary
    }
    edges.push_back({ids[parent], ids[i], weight()});
  }
  return Tree::from_edges(std::nullopt, std::move(edges), {ids[0]});
}

bool is_spanning_tree(const std::vector<Edge>& edges, const std::vector<Vertex>& vertices) {
  if (vertices.empty() || edges.size() + 1 != vertices.size()) return false;
  std::map<Vertex, std::size_t> index;
  for (Vertex v : vertices) index.emplace(v, index.size());
  Dsu dsu(vertices.size());
  for (const Edge& e : edges) {
    const auto u = index.find(e.u);
    const auto v = index.find(e.v);
    if (u == index.end() || v == index.end()) return false;
    if (!dsu.unite(u->second, v->second)) return false;
  }
  return true;
}

std::vector<std::string> check_split(const Tree& input, double lambda,
                                     const std::vector<Tree>& pieces) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& what) { failures.push_back(what); };

  const double bound = std::max(std::floor(input.weight / lambda), 1.0);
  if (static_cast<double>(pieces.size()) > bound) {
    std::ostringstream os;
    os << "count " << pieces.size() << " exceeds " << bound;
    fail(os.str());
  }

  auto key = [](const Edge& e) { return std::pair{std::min(e.u, e.v), std::max(e.u, e.v)}; };
  std::map<std::pair<Vertex, Vertex>, double> input_edges;
  for (const Edge& e : input.edges) input_edges.emplace(key(e), e.weight);
  std::set<std::pair<Vertex, Vertex>> used;
  std::map<Vertex, int> covered;

  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const Tree& t = pieces[p];
    double sum = 0.0;
    for (const Edge& e : t.edges) {
      sum += e.weight;
      const auto it = input_edges.find(key(e));
      if (it == input_edges.end() || it->second != e.weight)
        fail("piece " + std::to_string(p) + " has a foreign edge");
      if (!used.insert(key(e)).second) fail("edge reused by piece " + std::to_string(p));
    }
    if (!(sum < 2.0 * lambda)) fail("piece " + std::to_string(p) + " weight not below 2*lambda");
    if (std::abs(sum - t.weight) > 1e-9 * std::max(1.0, sum))
      fail("piece " + std::to_string(p) + " stored weight mismatch");
    if (t.vertices.size() > 1 && !is_spanning_tree(t.edges, t.vertices))
      fail("piece " + std::to_string(p) + " is not a tree");
    if (t.anchor && !std::binary_search(t.vertices.begin(), t.vertices.end(), *t.anchor))
      fail("piece " + std::to_string(p) + " anchor outside the piece");
    for (Vertex v : t.vertices)
      if (t.anchor != v) ++covered[v];
  }

  for (Vertex v : input.vertices) {
    const auto it = covered.find(v);
    if (it == covered.end()) fail("vertex " + std::to_string(v) + " uncovered");
    else if (it->second != 1) fail("vertex " + std::to_string(v) + " covered twice");
  }
  if (covered.size() != input.vertices.size()) fail("pieces cover vertices outside the tree");
  return failures;
}

}  // namespace mmcc::testing

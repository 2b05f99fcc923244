#include "mmcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "mmcc/errors.hpp"

namespace mmcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Vertex> others_of(std::span<const Vertex> vertices, Vertex root) {
  std::vector<Vertex> others(vertices.begin(), vertices.end());
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  others.erase(std::remove(others.begin(), others.end(), root), others.end());
  if (others.size() + 1 > kMaxTspVertices)
    throw InstanceTooLarge("exact TSP limited to " + std::to_string(kMaxTspVertices) + " vertices");
  return others;
}

Cycle make_cycle(Vertex root, std::vector<Vertex> interior, const MetricInstance& inst) {
  Cycle c;
  c.root = root;
  c.route.push_back(root);
  c.route.insert(c.route.end(), interior.begin(), interior.end());
  if (!interior.empty()) c.route.push_back(root);
  c.weight = route_weight(c.route, inst);
  return c;
}

// Held-Karp over `others` starting from `root`. path[mask * r + j] is the
// cheapest root -> ... -> others[j] path visiting exactly `mask`.
struct HeldKarp {
  std::size_t r = 0;
  std::vector<double> path;
  std::vector<std::uint8_t> prev;

  HeldKarp(std::span<const Vertex> others, Vertex root, const MetricInstance& inst)
      : r(others.size()), path((std::size_t{1} << r) * r, kInf), prev(path.size(), 0) {
    for (std::size_t j = 0; j < r; ++j) path[(std::size_t{1} << j) * r + j] = inst.weight(root, others[j]);
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
      for (std::size_t j = 0; j < r; ++j) {
        const double here = path[mask * r + j];
        if (!(mask >> j & 1U) || here == kInf) continue;
        for (std::size_t l = 0; l < r; ++l) {
          if (mask >> l & 1U) continue;
          const std::size_t next = mask | (std::size_t{1} << l);
          const double cand = here + inst.weight(others[j], others[l]);
          if (cand < path[next * r + l]) {
            path[next * r + l] = cand;
            prev[next * r + l] = static_cast<std::uint8_t>(j);
          }
        }
      }
    }
  }

  /// Closed-tour cost through `mask` and the last vertex achieving it.
  std::pair<double, std::size_t> close(std::size_t mask, std::span<const Vertex> others, Vertex root,
                                       const MetricInstance& inst) const {
    std::pair<double, std::size_t> best{mask == 0 ? 0.0 : kInf, 0};
    for (std::size_t j = 0; j < r; ++j) {
      if (!(mask >> j & 1U)) continue;
      const double c = path[mask * r + j] + inst.weight(others[j], root);
      if (c < best.first) best = {c, j};
    }
    return best;
  }

  std::vector<Vertex> order(std::size_t mask, std::size_t last, std::span<const Vertex> others) const {
    std::vector<Vertex> seq;
    while (mask) {
      seq.push_back(others[last]);
      const std::size_t p = prev[mask * r + last];
      mask &= ~(std::size_t{1} << last);
      last = p;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }
};

// Cheapest closed tour from a fixed root over every subset of `others`.
struct TourTable {
  Vertex root;
  std::vector<Vertex> others;
  std::vector<double> cost;  // indexed by subset mask of `others`

  TourTable(Vertex root_, std::vector<Vertex> others_, const MetricInstance& inst)
      : root(root_), others(std::move(others_)) {
    HeldKarp hk(others, root, inst);
    cost.resize(std::size_t{1} << others.size());
    for (std::size_t mask = 0; mask < cost.size(); ++mask) cost[mask] = hk.close(mask, others, root, inst).first;
  }
};

// Restricted-growth-string enumeration of set partitions of `count` items
// into at most `max_blocks` blocks. `visit` receives block bitmasks; a
// `prune(blocks)` returning true abandons the current prefix.
template <typename Prune, typename Visit>
void for_each_partition(std::size_t count, std::size_t max_blocks, Prune&& prune, Visit&& visit) {
  std::vector<std::uint32_t> blocks;
  std::function<void(std::size_t)> place = [&](std::size_t item) {
    if (item == count) {
      visit(blocks);
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << item;
    for (std::size_t b = 0; b <= blocks.size() && b < max_blocks; ++b) {
      const bool fresh = b == blocks.size();
      if (fresh) blocks.push_back(0);
      blocks[b] |= bit;
      if (!prune(blocks, b)) place(item + 1);
      blocks[b] &= ~bit;
      if (fresh) blocks.pop_back();
    }
  };
  place(0);
}

ExactSolution solve_strict(const MetricInstance& inst) {
  const auto depots = inst.depots();
  const auto sites = inst.sites();
  const std::size_t m = depots.size();
  const std::size_t s = sites.size();
  const std::size_t k = inst.robot_count();

  ExactSolution out;
  if (s == 0) {
    for (Vertex d : depots) out.cover.cycles.push_back(make_cycle(d, {}, inst));
    return out;
  }

  std::vector<TourTable> tables;
  tables.reserve(m);
  for (Vertex d : depots) tables.emplace_back(d, std::vector<Vertex>(sites.begin(), sites.end()), inst);

  auto cheapest = [&](std::uint32_t mask) {
    double best = kInf;
    for (const auto& t : tables) best = std::min(best, t.cost[mask]);
    return best;
  };

  double incumbent = kInf;
  std::vector<std::uint32_t> best_blocks;
  std::vector<std::size_t> best_assignment;

  // Tour cost only grows with the block, so a partial block already at the
  // incumbent cannot lead anywhere better.
  auto prune = [&](const std::vector<std::uint32_t>& blocks, std::size_t changed) {
    return cheapest(blocks[changed]) >= incumbent;
  };

  auto visit = [&](const std::vector<std::uint32_t>& blocks) {
    const std::size_t g = blocks.size();
    // Depots without a group each need their own zero-weight cycle.
    const std::size_t spare = k - g;
    const std::size_t needed = m > spare ? m - spare : 0;
    if (needed > g) return;

    std::vector<std::vector<std::size_t>> order(g);
    for (std::size_t i = 0; i < g; ++i) {
      order[i].resize(m);
      for (std::size_t d = 0; d < m; ++d) order[i][d] = d;
      std::stable_sort(order[i].begin(), order[i].end(), [&](std::size_t x, std::size_t y) {
        return tables[x].cost[blocks[i]] < tables[y].cost[blocks[i]];
      });
    }

    std::vector<std::size_t> assignment(g), uses(m, 0);
    std::size_t distinct = 0;
    std::function<void(std::size_t, double)> assign = [&](std::size_t i, double current) {
      if (distinct + (g - i) < needed) return;
      if (i == g) {
        incumbent = current;
        best_blocks = blocks;
        best_assignment = assignment;
        return;
      }
      for (std::size_t d : order[i]) {
        const double c = std::max(current, tables[d].cost[blocks[i]]);
        if (c >= incumbent) break;
        assignment[i] = d;
        distinct += uses[d]++ == 0;
        assign(i + 1, c);
        distinct -= --uses[d] == 0;
      }
    };
    assign(0, 0.0);
  };

  for_each_partition(s, k, prune, visit);
  if (best_blocks.empty()) throw NoFeasibleSolution("no cycle cover with at most k cycles");

  out.lambda_star = incumbent;
  std::vector<char> used(m, 0);
  for (std::size_t i = 0; i < best_blocks.size(); ++i) {
    const std::size_t d = best_assignment[i];
    used[d] = 1;
    std::vector<Vertex> group;
    for (std::size_t j = 0; j < s; ++j)
      if (best_blocks[i] >> j & 1U) group.push_back(sites[j]);
    out.cover.cycles.push_back(exact_tsp_cycle(group, depots[d], inst));
  }
  for (std::size_t d = 0; d < m; ++d)
    if (!used[d]) out.cover.cycles.push_back(make_cycle(depots[d], {}, inst));
  for (const auto& c : out.cover.cycles) out.cover.max_weight = std::max(out.cover.max_weight, c.weight);
  return out;
}

ExactSolution solve_relaxed(const MetricInstance& inst) {
  const std::size_t n = inst.vertex_count();
  if (n > kMaxTspVertices)
    throw InstanceTooLarge("relaxed exact solver limited to " + std::to_string(kMaxTspVertices) +
                           " vertices");
  const auto depots = inst.depots();
  const std::size_t k = inst.robot_count();

  std::vector<TourTable> tables;
  std::uint32_t depot_mask = 0;
  for (Vertex d : depots) {
    depot_mask |= std::uint32_t{1} << d;
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
      if (v != d) others.push_back(v);
    tables.emplace_back(d, std::move(others), inst);
  }
  // Full-vertex mask -> mask over the table's `others` (all vertices but d).
  auto drop = [](std::uint32_t mask, Vertex d) {
    const std::uint32_t low = mask & ((std::uint32_t{1} << d) - 1);
    return low | ((mask >> (d + 1)) << d);
  };
  // Cost of a block and the depot its tour starts from.
  auto block_cost = [&](std::uint32_t block) -> std::pair<double, std::size_t> {
    if (const std::uint32_t own = block & depot_mask) {
      const auto d = static_cast<Vertex>(std::countr_zero(own));
      const auto idx = static_cast<std::size_t>(std::lower_bound(depots.begin(), depots.end(), d) - depots.begin());
      return {tables[idx].cost[drop(block, d)], idx};
    }
    std::pair<double, std::size_t> best{kInf, 0};
    for (std::size_t i = 0; i < depots.size(); ++i) {
      const double c = tables[i].cost[drop(block, depots[i])];
      if (c < best.first) best = {c, i};
    }
    return best;
  };

  double incumbent = kInf;
  std::vector<std::uint32_t> best_blocks;
  auto prune = [&](const std::vector<std::uint32_t>& blocks, std::size_t changed) {
    return block_cost(blocks[changed]).first >= incumbent;
  };
  auto visit = [&](const std::vector<std::uint32_t>& blocks) {
    double worst = 0.0;
    for (std::uint32_t b : blocks) worst = std::max(worst, block_cost(b).first);
    if (worst < incumbent) {
      incumbent = worst;
      best_blocks = blocks;
    }
  };
  for_each_partition(n, k, prune, visit);
  if (best_blocks.empty()) throw NoFeasibleSolution("no cycle cover with at most k cycles");

  ExactSolution out;
  out.lambda_star = incumbent;
  for (std::uint32_t b : best_blocks) {
    const std::size_t idx = block_cost(b).second;
    std::vector<Vertex> group;
    for (Vertex v = 0; v < n; ++v)
      if (b >> v & 1U) group.push_back(v);
    out.cover.cycles.push_back(exact_tsp_cycle(group, depots[idx], inst));
    out.cover.max_weight = std::max(out.cover.max_weight, out.cover.cycles.back().weight);
  }
  return out;
}

}  // namespace

Cycle exact_tsp_cycle(std::span<const Vertex> vertices, Vertex root, const MetricInstance& inst) {
  const std::vector<Vertex> others = others_of(vertices, root);
  if (others.empty()) return make_cycle(root, {}, inst);
  HeldKarp hk(others, root, inst);
  const std::size_t full = (std::size_t{1} << others.size()) - 1;
  const auto [cost, last] = hk.close(full, others, root, inst);
  return make_cycle(root, hk.order(full, last, others), inst);
}

Cycle permutation_tsp_cycle(std::span<const Vertex> vertices, Vertex root, const MetricInstance& inst) {
  std::vector<Vertex> perm = others_of(vertices, root);
  std::vector<Vertex> best = perm;
  double best_cost = kInf;
  do {
    double c = 0.0;
    Vertex at = root;
    for (Vertex v : perm) {
      c += inst.weight(at, v);
      at = v;
    }
    c += inst.weight(at, root);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_cycle(root, std::move(best), inst);
}

ExactSolution exact_solve(const MetricInstance& inst, DepotRule rule) {
  if (inst.depot_count() == 0 || inst.robot_count() < inst.depot_count())
    throw NoFeasibleSolution("k = " + std::to_string(inst.robot_count()) + " < m = " +
                             std::to_string(inst.depot_count()));
  if (rule == DepotRule::relaxed) return solve_relaxed(inst);
  if (inst.sites().size() > kMaxOracleSites)
    throw InstanceTooLarge("exact solver limited to n - m <= " + std::to_string(kMaxOracleSites) +
                           ", got " + std::to_string(inst.sites().size()));
  return solve_strict(inst);
}

}  // namespace mmcc

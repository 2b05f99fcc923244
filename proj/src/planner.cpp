#include "mmcc/planner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <utility>

#include "mmcc/decompose.hpp"
#include "mmcc/errors.hpp"

namespace mmcc {

CandidateResult search_candidate(const ForestCandidate& cand, const MetricInstance& inst) {
  const double n = static_cast<double>(inst.vertex_count());
  const double k = static_cast<double>(inst.robot_count());
  const double eps = inst.epsilon();
  const double w_max_graph = inst.max_weight();

  CandidateResult result;
  result.trace.candidate_id = cand.id;
  result.trace.candidate_max_edge = cand.forest.max_edge_weight();

  if (w_max_graph == 0.0) {
    result.cover = cover_from_forest(decompose_forest(cand, 1.0), inst);
    return result;
  }

  const double floor =
      eps * std::max(w_max_graph, std::numeric_limits<double>::min()) * std::ldexp(1.0, -40);
  double a = result.trace.candidate_max_edge;
  double b = (n + k) * w_max_graph;

  for (std::size_t ell = 1;; ++ell) {
    SearchIteration it;
    it.ell = ell;
    it.a = a;
    it.b = b;
    it.lambda = 0.5 * (a + b);

    const DecomposedForest split = decompose_forest(cand, it.lambda);
    it.tree_count = split.size();
    it.feasible = it.tree_count <= inst.robot_count();

    double next_a = a;
    double next_b = b;
    if (it.feasible) {
      CycleCover cover = cover_from_forest(split, inst);
      it.cover_weight = cover.max_weight;
      if (!result.cover || cover.max_weight < result.cover->max_weight)
        result.cover = std::move(cover);
      next_b = it.lambda;
    } else {
      next_a = it.lambda;
    }
    result.trace.iterations.push_back(it);

    if (b - a < 0.5 * eps * a || b - a < floor) break;
    a = next_a;
    b = next_b;
  }
  return result;
}

namespace {

unsigned effective_workers(unsigned requested, std::uint64_t jobs) {
  const unsigned wanted = std::max(1U, requested);
  return static_cast<unsigned>(std::min<std::uint64_t>(wanted, std::max<std::uint64_t>(jobs, 1)));
}

}  // namespace

Solution solve_unchecked(const MetricInstance& inst, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  const RootedForest fstar = build_rooted_spanning_forest(inst);
  const ConnectorEdgeSet conn = build_connector_edges(inst, fstar);
  const std::uint64_t count = candidate_count(conn);

  std::vector<CandidateResult> results(count);
  auto run = [&](std::uint64_t id) {
    results[id] = search_candidate(make_candidate(fstar, conn, id), inst);
  };

  const unsigned workers = effective_workers(options.parallelism, count);
  if (workers == 1) {
    for (std::uint64_t id = 0; id < count; ++id) run(id);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t id = next++; id < count; id = next++) {
          try {
            run(id);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  // Reduce in candidate order with a strict comparison: ties keep the lower id.
  Solution solution;
  solution.epsilon = inst.epsilon();
  solution.stats.candidates = count;
  const CycleCover* best = nullptr;
  for (std::uint64_t id = 0; id < count; ++id) {
    auto& r = results[id];
    solution.stats.iterations += r.trace.iterations.size();
    if (r.cover && (!best || r.cover->max_weight < best->max_weight)) {
      best = &*r.cover;
      solution.candidate_id = id;
    }
  }
  if (!best) throw NoFeasibleSolution("no candidate forest produced at most k trees");
  solution.cover = *best;
  solution.objective = best->max_weight;
  solution.traces.reserve(count);
  for (auto& r : results) solution.traces.push_back(std::move(r.trace));

  solution.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return solution;
}

Solution solve(const MetricInstance& inst, const SolveOptions& options) {
  if (auto report = validate_instance(inst); !report.ok()) throw ValidationError(std::move(report));
  return solve_unchecked(inst, options);
}

ValidationReport validate_cover(const CycleCover& cover, const MetricInstance& inst,
                                DepotRule rule) {
  ValidationReport report;
  const std::size_t n = inst.vertex_count();

  if (cover.size() > inst.robot_count())
    report.add(ViolationKind::too_many_cycles,
               std::to_string(cover.size()) + " cycles exceed k = " + std::to_string(inst.robot_count()));

  std::vector<char> covered(n, 0);
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_owner;
  double max_weight = 0.0;

  for (std::size_t c = 0; c < cover.cycles.size(); ++c) {
    const Cycle& cycle = cover.cycles[c];
    const std::string name = "cycle " + std::to_string(c);
    const auto& route = cycle.route;

    if (route.empty()) {
      report.add(ViolationKind::bad_route, name + " has an empty route");
      continue;
    }
    if (std::any_of(route.begin(), route.end(), [n](Vertex v) { return v >= n; })) {
      report.add(ViolationKind::bad_route, name + " has a vertex id out of range");
      continue;
    }
    if (cycle.root >= n || !inst.is_depot(cycle.root))
      report.add(ViolationKind::bad_root, name + " root " + std::to_string(cycle.root) + " is not a depot",
                 {cycle.root});
    if (route.front() != cycle.root || route.back() != cycle.root)
      report.add(ViolationKind::bad_root, name + " does not start and end at its root", {cycle.root});
    if (route.size() == 2)
      report.add(ViolationKind::bad_route, name + " is a two-entry route; use [d] or [d, v, d]");

    // Interior vertices must be distinct and differ from the root.
    std::vector<Vertex> members(route.begin(), route.size() > 1 ? route.end() - 1 : route.end());
    std::sort(members.begin(), members.end());
    if (auto dup = std::adjacent_find(members.begin(), members.end()); dup != members.end())
      report.add(ViolationKind::bad_route, name + " visits vertex " + std::to_string(*dup) + " twice",
                 {*dup});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members) covered[v] = 1;

    const auto depots = std::count_if(members.begin(), members.end(),
                                      [&](Vertex v) { return inst.is_depot(v); });
    if (rule == DepotRule::strict && depots != 1)
      report.add(ViolationKind::depot_count,
                 name + " contains " + std::to_string(depots) + " depots; exactly one is required");

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 1; i < route.size(); ++i)
      edges.emplace_back(std::min(route[i - 1], route[i]), std::max(route[i - 1], route[i]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
      auto [it, inserted] = edge_owner.emplace(e, c);
      if (!inserted)
        report.add(ViolationKind::shared_edge,
                   "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       ") appears in cycles " + std::to_string(it->second) + " and " + std::to_string(c),
                   {e.first, e.second});
    }

    const double recomputed = route_weight(route, inst);
    if (!approx_equal(cycle.weight, recomputed))
      report.add(ViolationKind::weight_mismatch, name + " stores weight " + std::to_string(cycle.weight) +
                                                     " but its route weighs " + std::to_string(recomputed));
    max_weight = std::max(max_weight, recomputed);
  }

  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) report.add(ViolationKind::uncovered_vertex, "vertex " + std::to_string(v) + " is not covered", {v});

  if (!approx_equal(cover.max_weight, max_weight))
    report.add(ViolationKind::weight_mismatch, "max_weight " + std::to_string(cover.max_weight) +
                                                   " differs from the heaviest cycle " + std::to_string(max_weight));
  return report;
}

}  // namespace mmcc

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmcc/cyclegen.hpp"
#include "mmcc/forest.hpp"
#include "mmcc/instance.hpp"
#include "mmcc/report.hpp"

namespace mmcc {

/// One step of the per-candidate binary search over lambda.
struct SearchIteration {
  std::size_t ell = 0;
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.0;
  std::size_t tree_count = 0;
  bool feasible = false;
  std::optional<double> cover_weight;
};

struct SearchTrace {
  std::uint64_t candidate_id = 0;
  double candidate_max_edge = 0.0;  // w_max of the candidate forest
  std::vector<SearchIteration> iterations;
};

struct CandidateResult {
  std::optional<CycleCover> cover;  // best feasible cover, if any
  SearchTrace trace;
};

/// Binary search on lambda over [w_max(candidate), (n + k) * w_max(G)].
///
/// Each iteration decomposes the candidate at the midpoint. At most k trees is
/// feasible: a cover is generated, kept if strictly better than the best so
/// far, and the upper bound moves down; otherwise the lower bound moves up.
/// Stops once b - a < 0.5 * epsilon * a for the iteration's interval, or once
/// b - a falls under an absolute floor of epsilon * w_max(G) * 2^-40 (which
/// only matters when the lower bound is zero). When every weight is zero the
/// candidate itself is returned as a zero-weight cover without searching.
CandidateResult search_candidate(const ForestCandidate& cand, const MetricInstance& inst);

struct SolveOptions {
  /// Worker threads for the candidate fan-out; 0 is treated as 1.
  unsigned parallelism = 1;
};

struct SolveStats {
  std::size_t candidates = 0;
  std::size_t iterations = 0;
  double elapsed_ms = 0.0;
};

struct Solution {
  CycleCover cover;
  double objective = 0.0;
  std::uint64_t candidate_id = 0;
  double epsilon = 0.0;
  std::vector<SearchTrace> traces;  // ascending candidate id
  SolveStats stats;
};

/// Full solver. Validates the instance (throws ValidationError), searches every
/// candidate forest and returns the lowest-objective cover; ties go to the
/// lowest candidate id, so the result does not depend on `parallelism`.
Solution solve(const MetricInstance& inst, const SolveOptions& options = {});

/// Same as solve() but skips instance validation (the caller vouches for it).
Solution solve_unchecked(const MetricInstance& inst, const SolveOptions& options = {});

enum class DepotRule {
  /// Each cycle is rooted at a depot; other depots may appear inside it.
  relaxed,
  /// Each cycle contains exactly one depot.
  strict,
};

/// Checks: at most k cycles; every route starts and ends at its root depot
/// with distinct interior vertices; the depot rule; coverage of all vertices;
/// no edge shared by two cycles; stored weights match recomputation.
ValidationReport validate_cover(const CycleCover& cover, const MetricInstance& inst,
                                DepotRule rule = DepotRule::relaxed);

}  // namespace mmcc

#pragma once

#include <string>
#include <string_view>

#include "mmcc/cyclegen.hpp"
#include "mmcc/forest.hpp"
#include "mmcc/planner.hpp"
#include "mmcc/report.hpp"

namespace mmcc {

/// {"cycles": [{"root", "route", "weight"}], "max_weight"}
std::string cover_to_json(const CycleCover& cover);

/// Cover JSON plus "objective", "candidate_id", "epsilon", "iterations" and
/// "elapsed_ms" (written as 0 when `include_timing` is false).
std::string solution_to_json(const Solution& solution, bool include_timing = true);

/// candidate,ell,a,b,lambda,tree_count,feasible,cover_weight
std::string trace_to_csv(const Solution& solution);

/// {"ok": bool, "violations": [{"kind", "message", "witness"}]}
std::string report_to_json(const ValidationReport& report);

/// Undirected DOT graph; edges labeled with weights, depots drawn as boxes.
std::string forest_to_dot(const RootedForest& forest, const MetricInstance& inst,
                          std::string_view name = "forest");

/// One color per cycle.
std::string cover_to_dot(const CycleCover& cover, const MetricInstance& inst,
                         std::string_view name = "cover");

}  // namespace mmcc

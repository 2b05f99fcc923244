#include "mmcc/mmcc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mmcc/errors.hpp"
#include "mmcc/export.hpp"
#include "mmcc/forest.hpp"
#include "mmcc/generate.hpp"
#include "mmcc/instance_io.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/planner.hpp"

struct mmcc_instance {
  mmcc::MetricInstance inst;
};

struct mmcc_solution {
  mmcc::Solution sol;
};

namespace {

thread_local std::string last_error;

mmcc_status fail(mmcc_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
mmcc_status guarded(Body&& body) noexcept {
  try {
    body();
    return MMCC_OK;
  } catch (const mmcc::ParseError& e) {
    return fail(MMCC_ERR_PARSE, e.what());
  } catch (const mmcc::ValidationError& e) {
    return fail(MMCC_ERR_VALIDATION, e.what());
  } catch (const mmcc::DisconnectedGraph& e) {
    return fail(MMCC_ERR_DISCONNECTED, e.what());
  } catch (const mmcc::InstanceTooLarge& e) {
    return fail(MMCC_ERR_TOO_LARGE, e.what());
  } catch (const mmcc::NoFeasibleSolution& e) {
    return fail(MMCC_ERR_INFEASIBLE, e.what());
  } catch (const mmcc::IoError& e) {
    return fail(MMCC_ERR_IO, e.what());
  } catch (const mmcc::PreconditionViolation& e) {
    return fail(MMCC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MMCC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MMCC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MMCC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MMCC_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

mmcc::SolveOptions solve_options(const mmcc_solve_options* options) {
  return {options ? options->parallelism : 1U};
}

}  // namespace

extern "C" {

const char* mmcc_last_error(void) { return last_error.c_str(); }

const char* mmcc_status_string(mmcc_status status) {
  switch (status) {
    case MMCC_OK: return "ok";
    case MMCC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MMCC_ERR_PARSE: return "parse error";
    case MMCC_ERR_VALIDATION: return "validation error";
    case MMCC_ERR_DISCONNECTED: return "disconnected graph";
    case MMCC_ERR_TOO_LARGE: return "instance too large";
    case MMCC_ERR_INFEASIBLE: return "no feasible solution";
    case MMCC_ERR_IO: return "i/o error";
    case MMCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void mmcc_string_free(char* s) { std::free(s); }

mmcc_status mmcc_instance_from_json(const char* json, size_t length, mmcc_instance** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = nullptr;
    auto inst = mmcc::resolve_instance(mmcc::load_instance(std::string_view(json, length)));
    *out = new mmcc_instance{std::move(inst)};
  });
}

mmcc_status mmcc_instance_from_file(const char* path, mmcc_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = nullptr;
    *out = new mmcc_instance{mmcc::read_instance_file(path)};
  });
}

mmcc_status mmcc_instance_create(size_t n, const double* matrix, const uint32_t* depots,
                                 size_t depot_count, size_t k, double epsilon, mmcc_instance** out) {
  return guarded([&] {
    require(out && matrix && (depots || depot_count == 0), "null argument");
    *out = nullptr;
    mmcc::WeightMatrix w(n);
    for (mmcc::Vertex i = 0; i < n; ++i)
      for (mmcc::Vertex j = 0; j < n; ++j) w.at(i, j) = matrix[std::size_t{i} * n + j];
    mmcc::MetricInstance inst(std::move(w), std::vector<mmcc::Vertex>(depots, depots + depot_count), k,
                              epsilon);
    if (auto report = mmcc::validate_instance(inst); !report.ok())
      throw mmcc::ValidationError(std::move(report));
    *out = new mmcc_instance{std::move(inst)};
  });
}

void mmcc_instance_free(mmcc_instance* inst) { delete inst; }

size_t mmcc_instance_vertex_count(const mmcc_instance* inst) { return inst ? inst->inst.vertex_count() : 0; }
size_t mmcc_instance_depot_count(const mmcc_instance* inst) { return inst ? inst->inst.depot_count() : 0; }
size_t mmcc_instance_robot_count(const mmcc_instance* inst) { return inst ? inst->inst.robot_count() : 0; }
double mmcc_instance_epsilon(const mmcc_instance* inst) { return inst ? inst->inst.epsilon() : 0.0; }

double mmcc_instance_weight(const mmcc_instance* inst, uint32_t u, uint32_t v) {
  if (!inst || u >= inst->inst.vertex_count() || v >= inst->inst.vertex_count()) return NAN;
  return inst->inst.weight(u, v);
}

mmcc_status mmcc_instance_set_epsilon(mmcc_instance* inst, double epsilon) {
  return guarded([&] {
    require(inst != nullptr, "null instance");
    require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    inst->inst = inst->inst.with_epsilon(epsilon);
  });
}

mmcc_status mmcc_instance_to_json(const mmcc_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = copy_string(mmcc::instance_to_json(inst->inst));
  });
}

mmcc_status mmcc_instance_forest_dot(const mmcc_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    const auto forest = mmcc::build_rooted_spanning_forest(inst->inst);
    *out = copy_string(mmcc::forest_to_dot(forest, inst->inst));
  });
}

mmcc_status mmcc_solve(const mmcc_instance* inst, const mmcc_solve_options* options, mmcc_solution** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = nullptr;
    *out = new mmcc_solution{mmcc::solve(inst->inst, solve_options(options))};
  });
}

void mmcc_solution_free(mmcc_solution* solution) { delete solution; }

double mmcc_solution_objective(const mmcc_solution* s) { return s ? s->sol.objective : NAN; }
uint64_t mmcc_solution_candidate_id(const mmcc_solution* s) { return s ? s->sol.candidate_id : 0; }
size_t mmcc_solution_iterations(const mmcc_solution* s) { return s ? s->sol.stats.iterations : 0; }
double mmcc_solution_elapsed_ms(const mmcc_solution* s) { return s ? s->sol.stats.elapsed_ms : 0.0; }
size_t mmcc_solution_cycle_count(const mmcc_solution* s) { return s ? s->sol.cover.size() : 0; }

mmcc_status mmcc_solution_cycle(const mmcc_solution* solution, size_t index, uint32_t* root,
                                const uint32_t** route, size_t* route_length, double* weight) {
  return guarded([&] {
    require(solution != nullptr, "null solution");
    require(index < solution->sol.cover.size(), "cycle index out of range");
    const mmcc::Cycle& c = solution->sol.cover.cycles[index];
    if (root) *root = c.root;
    if (route) *route = c.route.data();
    if (route_length) *route_length = c.route.size();
    if (weight) *weight = c.weight;
  });
}

mmcc_status mmcc_solution_to_json(const mmcc_solution* solution, int include_timing, char** out) {
  return guarded([&] {
    require(solution && out, "null argument");
    *out = copy_string(mmcc::solution_to_json(solution->sol, include_timing != 0));
  });
}

mmcc_status mmcc_solution_trace_csv(const mmcc_solution* solution, char** out) {
  return guarded([&] {
    require(solution && out, "null argument");
    *out = copy_string(mmcc::trace_to_csv(solution->sol));
  });
}

mmcc_status mmcc_solution_dot(const mmcc_solution* solution, const mmcc_instance* inst, char** out) {
  return guarded([&] {
    require(solution && inst && out, "null argument");
    *out = copy_string(mmcc::cover_to_dot(solution->sol.cover, inst->inst));
  });
}

mmcc_status mmcc_solution_validate(const mmcc_solution* solution, const mmcc_instance* inst, char** report) {
  bool ok = false;
  const mmcc_status status = guarded([&] {
    require(solution && inst, "null argument");
    const auto r = mmcc::validate_cover(solution->sol.cover, inst->inst);
    ok = r.ok();
    if (!ok) last_error = "invalid cover:\n" + r.to_string();
    if (report) *report = copy_string(mmcc::report_to_json(r));
  });
  if (status != MMCC_OK) return status;
  return ok ? MMCC_OK : MMCC_ERR_VALIDATION;
}

mmcc_status mmcc_verify(const mmcc_instance* inst, const mmcc_solve_options* options, mmcc_verify_result* out) {
  return guarded([&] {
    require(inst && out, "null argument");
    const auto exact = mmcc::exact_solve(inst->inst);
    const auto sol = mmcc::solve(inst->inst, solve_options(options));
    out->lambda_star = exact.lambda_star;
    out->alg_objective = sol.objective;
    if (exact.lambda_star > 0.0)
      out->ratio = sol.objective / exact.lambda_star;
    else
      out->ratio = sol.objective == 0.0 ? 1.0 : INFINITY;
    out->within_bound = sol.objective <= (5.0 + inst->inst.epsilon()) * exact.lambda_star ? 1 : 0;
  });
}

mmcc_status mmcc_verify_result_to_json(const mmcc_verify_result* result, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    nlohmann::ordered_json doc;
    doc["lambda_star"] = result->lambda_star;
    doc["alg_objective"] = result->alg_objective;
    if (std::isfinite(result->ratio))
      doc["ratio"] = result->ratio;
    else
      doc["ratio"] = nullptr;
    doc["within_bound"] = result->within_bound != 0;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

mmcc_status mmcc_generate_instance_json(const mmcc_gen_params* params, char** out) {
  return guarded([&] {
    require(params && out, "null argument");
    const auto inst = mmcc::random_geometric_instance(
        {params->n, params->m, params->k, params->epsilon, params->seed});
    *out = copy_string(mmcc::instance_to_json(inst));
  });
}

mmcc_status mmcc_bench(const mmcc_bench_params* params, char** csv, mmcc_bench_summary* summary) {
  return guarded([&] {
    require(params && csv, "null argument");
    require(params->sizes && params->size_count > 0, "bench needs at least one size");
    require(params->depot_counts && params->depot_count_count > 0, "bench needs at least one depot count");
    mmcc::BenchConfig config;
    config.sizes.assign(params->sizes, params->sizes + params->size_count);
    config.depot_counts.assign(params->depot_counts, params->depot_counts + params->depot_count_count);
    if (params->k > 0) config.k = params->k;
    config.epsilon = params->epsilon;
    config.instances = params->instances;
    config.repeats = params->repeats;
    config.seed = params->seed;
    config.parallelism = params->parallelism;
    const auto report = mmcc::run_bench(config);
    *csv = copy_string(mmcc::bench_to_csv(report));
    if (summary) {
      summary->has_size_slope = report.size_slope.has_value();
      summary->size_slope = report.size_slope.value_or(0.0);
      summary->has_depot_ratio = report.depot_ratio.has_value();
      summary->depot_ratio = report.depot_ratio.value_or(0.0);
    }
  });
}

}  // extern "C"

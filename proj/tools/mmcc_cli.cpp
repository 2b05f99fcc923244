// mmcc: solve, verify, bench and generate rooted min-max cycle cover instances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmcc/mmcc.h"

namespace {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitValidation = 2,
  kExitParse = 3,
  kExitGuarantee = 4,
  kExitTooLarge = 5,
};

struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(mmcc_status status) {
  switch (status) {
    case MMCC_OK: return kExitOk;
    case MMCC_ERR_PARSE: return kExitParse;
    case MMCC_ERR_VALIDATION:
    case MMCC_ERR_DISCONNECTED:
    case MMCC_ERR_INVALID_ARGUMENT:
    case MMCC_ERR_INFEASIBLE: return kExitValidation;
    case MMCC_ERR_TOO_LARGE: return kExitTooLarge;
    default: return kExitError;
  }
}

void check(mmcc_status status) {
  if (status != MMCC_OK)
    throw CliFailure{exit_code_for(status), std::string(mmcc_status_string(status)) + ": " + mmcc_last_error()};
}

struct InstanceDeleter {
  void operator()(mmcc_instance* p) const { mmcc_instance_free(p); }
};
struct SolutionDeleter {
  void operator()(mmcc_solution* p) const { mmcc_solution_free(p); }
};
using InstancePtr = std::unique_ptr<mmcc_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<mmcc_solution, SolutionDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  mmcc_string_free(s);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw CliFailure{kExitError, "cannot write " + path};
}

InstancePtr load(const std::string& path, std::optional<double> epsilon) {
  mmcc_instance* raw = nullptr;
  check(mmcc_instance_from_file(path.c_str(), &raw));
  InstancePtr inst(raw);
  if (epsilon) check(mmcc_instance_set_epsilon(inst.get(), *epsilon));
  return inst;
}

unsigned default_parallelism() {
  if (const char* env = std::getenv("MMCC_PARALLELISM")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "mmcc: ignoring invalid MMCC_PARALLELISM=" << env << '\n';
  }
  return 1;
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::optional<double> epsilon;
  unsigned parallelism = 1;
  std::string trace;
  std::string dot;
  bool no_timing = false;
};

int cmd_solve(const SolveArgs& args) {
  InstancePtr inst = load(args.input, args.epsilon);
  const mmcc_solve_options options{args.parallelism};
  mmcc_solution* raw = nullptr;
  check(mmcc_solve(inst.get(), &options, &raw));
  SolutionPtr sol(raw);

  char* report = nullptr;
  const mmcc_status valid = mmcc_solution_validate(sol.get(), inst.get(), &report);
  const std::string report_text = take(report);
  if (valid != MMCC_OK) {
    std::cerr << "mmcc: emitted cover failed validation\n" << report_text;
    return kExitValidation;
  }

  char* json = nullptr;
  check(mmcc_solution_to_json(sol.get(), args.no_timing ? 0 : 1, &json));
  write_output(args.output, take(json));
  if (!args.trace.empty()) {
    char* csv = nullptr;
    check(mmcc_solution_trace_csv(sol.get(), &csv));
    write_output(args.trace, take(csv));
  }
  if (!args.dot.empty()) {
    char* forest = nullptr;
    check(mmcc_instance_forest_dot(inst.get(), &forest));
    char* cover = nullptr;
    check(mmcc_solution_dot(sol.get(), inst.get(), &cover));
    write_output(args.dot, take(forest) + take(cover));
  }
  return kExitOk;
}

int cmd_verify(const SolveArgs& args) {
  InstancePtr inst = load(args.input, args.epsilon);
  const mmcc_solve_options options{args.parallelism};
  mmcc_verify_result result{};
  check(mmcc_verify(inst.get(), &options, &result));
  char* json = nullptr;
  check(mmcc_verify_result_to_json(&result, &json));
  write_output(args.output, take(json));
  if (!result.within_bound) {
    std::cerr << "mmcc: objective " << result.alg_objective << " exceeds (5 + epsilon) * lambda* = "
              << (5.0 + mmcc_instance_epsilon(inst.get())) * result.lambda_star << '\n';
    return kExitGuarantee;
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{50, 100, 200, 400, 800};
  std::vector<std::size_t> depots{3};
  std::size_t k = 0;
  double epsilon = 0.25;
  std::size_t instances = 3;
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
  std::string output;
};

int cmd_bench(const BenchArgs& args) {
  const mmcc_bench_params params{args.sizes.data(), args.sizes.size(), args.depots.data(),
                                 args.depots.size(), args.k,           args.epsilon,
                                 args.instances,     args.repeats,     args.seed,
                                 args.parallelism};
  char* csv = nullptr;
  mmcc_bench_summary summary{};
  check(mmcc_bench(&params, &csv, &summary));
  write_output(args.output, take(csv));
  return kExitOk;
}

struct GenArgs {
  std::size_t n = 10;
  std::size_t m = 2;
  std::optional<std::size_t> k;
  double epsilon = 0.25;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  const mmcc_gen_params params{args.n, args.m, args.k.value_or(args.m), args.epsilon, args.seed};
  char* json = nullptr;
  check(mmcc_generate_instance_json(&params, &json));
  write_output(args.output, take(json));
  return kExitOk;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("-i,--input", args.input, "Instance file (JSON, or matrix text for .txt/.mat)")
      ->required();
  cmd->add_option("-o,--output", args.output, "Output file (default: standard output)");
  cmd->add_option("-e,--epsilon", args.epsilon, "Override the instance epsilon, in (0, 1)");
  cmd->add_option("-p,--parallelism", args.parallelism, "Worker threads (default: $MMCC_PARALLELISM or 1)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted min-max cycle cover planner"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  solve_args.parallelism = default_parallelism();
  auto* solve = app.add_subcommand("solve", "Plan a cycle cover and print it as JSON");
  add_solver_flags(solve, solve_args);
  solve->add_option("--trace", solve_args.trace, "Write the binary-search trace as CSV");
  solve->add_option("--dot", solve_args.dot, "Write the spanning forest and the cover as DOT");
  solve->add_flag("--no-timing", solve_args.no_timing, "Write elapsed_ms as 0 for reproducible output");

  SolveArgs verify_args;
  verify_args.parallelism = default_parallelism();
  auto* verify = app.add_subcommand("verify", "Compare the planner against the exact solver");
  add_solver_flags(verify, verify_args);

  BenchArgs bench_args;
  bench_args.parallelism = default_parallelism();
  auto* bench = app.add_subcommand("bench", "Time the planner on random geometric instances");
  bench->add_option("--n", bench_args.sizes, "Instance sizes")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--m", bench_args.depots, "Depot counts")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--k", bench_args.k, "Robots (default: max(m, ceil(n / 10)))");
  bench->add_option("-e,--epsilon", bench_args.epsilon, "Epsilon")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--instances", bench_args.instances, "Instances per (n, m)")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", bench_args.repeats, "Timed runs per instance")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Base seed");
  bench->add_option("-p,--parallelism", bench_args.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_args.output, "CSV output file (default: standard output)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a seeded random geometric instance as JSON");
  gen->add_option("--n", gen_args.n, "Vertices")->required();
  gen->add_option("--m", gen_args.m, "Depots")->required();
  gen->add_option("--k", gen_args.k, "Robots (default: m)");
  gen->add_option("-e,--epsilon", gen_args.epsilon, "Epsilon");
  gen->add_option("--seed", gen_args.seed, "Seed");
  gen->add_option("-o,--output", gen_args.output, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args);
    if (*bench) return cmd_bench(bench_args);
    if (*gen) return cmd_gen(gen_args);
  } catch (const CliFailure& failure) {
    std::cerr << "mmcc: " << failure.message << '\n';
    return failure.code;
  } catch (const std::exception& e) {
    std::cerr << "mmcc: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mmcc/types.hpp"

namespace mmcc {

enum class ViolationKind {
  // instance
  malformed,
  negative_weight,
  non_finite_weight,
  nonzero_diagonal,
  asymmetric,
  triangle_inequality,
  no_depots,
  too_few_robots,
  epsilon_out_of_range,
  disconnected,
  // cover
  too_many_cycles,
  bad_root,
  bad_route,
  depot_count,
  uncovered_vertex,
  shared_edge,
  weight_mismatch,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<Vertex> witness;
};

/// Result of a reporting check. Empty iff the checked object is valid.
class ValidationReport {
 public:
  bool ok() const noexcept { return violations_.empty(); }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  void add(ViolationKind kind, std::string message, std::vector<Vertex> witness = {});
  bool has(ViolationKind kind) const noexcept;

  /// One violation per line.
  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace mmcc

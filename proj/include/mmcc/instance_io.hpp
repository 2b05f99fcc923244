#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "mmcc/instance.hpp"

namespace mmcc {

/// A raw graph together with the planning parameters from the same file.
struct RawInstance {
  RawSiteGraph graph;
  std::size_t k = 0;
  double epsilon = 0.0;
};

using LoadedInstance = std::variant<MetricInstance, RawInstance>;

enum class InstanceFormat {
  /// {"n", "depots", "k", "epsilon", and one of "matrix" | "edges"}
  json,
  /// Plain text: "n m k epsilon", then the m depot ids, then n rows of n weights.
  /// '#' starts a comment.
  matrix,
};

/// Parses an instance. Throws ParseError with the offending line or field.
LoadedInstance load_instance(std::istream& in, InstanceFormat format = InstanceFormat::json);
LoadedInstance load_instance(std::string_view text, InstanceFormat format = InstanceFormat::json);

/// Applies metric closure to raw graphs and validates the result.
/// Throws ValidationError (or DisconnectedGraph) when the instance is unusable.
MetricInstance resolve_instance(LoadedInstance loaded);

/// load_instance + resolve_instance on a file; the format follows the
/// extension (".txt" / ".mat" select the matrix format).
MetricInstance read_instance_file(const std::filesystem::path& path);

/// Serializes as JSON with an explicit matrix.
std::string instance_to_json(const MetricInstance& inst);

}  // namespace mmcc

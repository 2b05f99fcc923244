#include "mmcc/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mmcc/errors.hpp"

namespace mmcc {

namespace {

using nlohmann::json;

std::size_t require_count(const json& doc, const char* field, std::size_t min_value) {
  if (!doc.contains(field)) throw ParseError(field, "missing required field");
  const json& v = doc.at(field);
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min_value))
    throw ParseError(field, "expected an integer >= " + std::to_string(min_value));
  return v.get<std::size_t>();
}

double require_number(const json& value, const std::string& locus) {
  if (!value.is_number()) throw ParseError(locus, "expected a number");
  return value.get<double>();
}

Vertex require_vertex(const json& value, std::size_t n, const std::string& locus) {
  if (!value.is_number_integer()) throw ParseError(locus, "expected an integer vertex id");
  const long long id = value.get<long long>();
  if (id < 0 || static_cast<std::size_t>(id) >= n)
    throw ParseError(locus, "vertex id " + std::to_string(id) + " out of range [0, " +
                                std::to_string(n) + ")");
  return static_cast<Vertex>(id);
}

LoadedInstance parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("", "instance must be a JSON object");

  const std::size_t n = require_count(doc, "n", 1);
  const std::size_t k = require_count(doc, "k", 0);
  if (!doc.contains("epsilon")) throw ParseError("epsilon", "missing required field");
  const double epsilon = require_number(doc.at("epsilon"), "epsilon");

  if (!doc.contains("depots")) throw ParseError("depots", "missing required field");
  const json& depots_json = doc.at("depots");
  if (!depots_json.is_array()) throw ParseError("depots", "expected an array");
  std::vector<Vertex> depots;
  for (std::size_t i = 0; i < depots_json.size(); ++i)
    depots.push_back(require_vertex(depots_json[i], n, "depots[" + std::to_string(i) + "]"));
  {
    auto sorted = depots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("depots", "duplicate depot id");
  }

  const bool has_matrix = doc.contains("matrix");
  const bool has_edges = doc.contains("edges");
  if (has_matrix == has_edges)
    throw ParseError("matrix|edges", "exactly one of \"matrix\" or \"edges\" is required");

  if (has_matrix) {
    const json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != n)
      throw ParseError("matrix", "expected " + std::to_string(n) + " rows");
    WeightMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_locus = "matrix[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != n)
        throw ParseError(row_locus, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        w.at(static_cast<Vertex>(i), static_cast<Vertex>(j)) =
            require_number(rows[i][j], row_locus + "[" + std::to_string(j) + "]");
    }
    return MetricInstance(std::move(w), std::move(depots), k, epsilon);
  }

  const json& edges = doc.at("edges");
  if (!edges.is_array()) throw ParseError("edges", "expected an array of [u, v, w]");
  RawInstance raw;
  raw.graph.vertex_count = n;
  raw.graph.depot_ids = std::move(depots);
  raw.k = k;
  raw.epsilon = epsilon;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string locus = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3) throw ParseError(locus, "expected [u, v, w]");
    raw.graph.edges.push_back({require_vertex(e[0], n, locus + "[0]"),
                               require_vertex(e[1], n, locus + "[1]"),
                               require_number(e[2], locus + "[2]")});
  }
  return raw;
}

// Line-oriented reader for the plain matrix format.
class TokenReader {
 public:
  explicit TokenReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      std::string word;
      while (words >> word) tokens_.push_back({std::move(word), number});
    }
  }

  template <typename T>
  T next(const char* what) {
    if (pos_ >= tokens_.size())
      throw ParseError("line " + std::to_string(last_line()), std::string("expected ") + what +
                                                                 ", found end of input");
    const auto& [word, line] = tokens_[pos_++];
    std::istringstream in(word);
    T value{};
    if (!(in >> value) || !in.eof())
      throw ParseError("line " + std::to_string(line),
                       std::string("expected ") + what + ", found \"" + word + "\"");
    return value;
  }

  std::size_t current_line() const {
    return pos_ < tokens_.size() ? tokens_[pos_].second : last_line();
  }
  bool done() const { return pos_ >= tokens_.size(); }

 private:
  std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().second; }

  std::vector<std::pair<std::string, std::size_t>> tokens_;
  std::size_t pos_ = 0;
};

LoadedInstance parse_matrix(std::string_view text) {
  TokenReader reader(text);
  const auto n = reader.next<long long>("vertex count n");
  const auto m = reader.next<long long>("depot count m");
  const auto k = reader.next<long long>("robot count k");
  const auto epsilon = reader.next<double>("epsilon");
  if (n < 1 || m < 0 || k < 0)
    throw ParseError("line 1", "n must be positive and m, k non-negative");
  std::vector<Vertex> depots;
  for (long long i = 0; i < m; ++i) {
    const std::size_t line = reader.current_line();
    const auto d = reader.next<long long>("depot id");
    if (d < 0 || d >= n)
      throw ParseError("line " + std::to_string(line), "depot id " + std::to_string(d) + " out of range");
    depots.push_back(static_cast<Vertex>(d));
  }
  {
    auto sorted = depots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("depots", "duplicate depot id");
  }
  WeightMatrix w(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) w.at(i, j) = reader.next<double>("matrix entry");
  if (!reader.done())
    throw ParseError("line " + std::to_string(reader.current_line()), "trailing data after matrix");
  return MetricInstance(std::move(w), std::move(depots), static_cast<std::size_t>(k), epsilon);
}

}  // namespace

LoadedInstance load_instance(std::string_view text, InstanceFormat format) {
  return format == InstanceFormat::json ? parse_json(text) : parse_matrix(text);
}

LoadedInstance load_instance(std::istream& in, InstanceFormat format) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_instance(buffer.str(), format);
}

MetricInstance resolve_instance(LoadedInstance loaded) {
  MetricInstance inst = std::visit(
      [](auto&& value) -> MetricInstance {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, MetricInstance>) {
          return std::move(value);
        } else {
          WeightMatrix w = metric_closure(value.graph);
          return MetricInstance(std::move(w), value.graph.depot_ids, value.k, value.epsilon);
        }
      },
      std::move(loaded));
  if (auto report = validate_instance(inst); !report.ok()) throw ValidationError(std::move(report));
  return inst;
}

MetricInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const auto ext = path.extension().string();
  const auto format = (ext == ".txt" || ext == ".mat") ? InstanceFormat::matrix : InstanceFormat::json;
  return resolve_instance(load_instance(in, format));
}

std::string instance_to_json(const MetricInstance& inst) {
  nlohmann::ordered_json doc;
  doc["n"] = inst.vertex_count();
  doc["depots"] = std::vector<Vertex>(inst.depots().begin(), inst.depots().end());
  doc["k"] = inst.robot_count();
  doc["epsilon"] = inst.epsilon();
  auto rows = nlohmann::ordered_json::array();
  for (Vertex i = 0; i < inst.vertex_count(); ++i) {
    const auto row = inst.weights().row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump() + "\n";
}

}  // namespace mmcc

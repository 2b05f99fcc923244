#include "mmcc/export.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace mmcc {

namespace {

using ojson = nlohmann::ordered_json;

ojson cover_json(const CycleCover& cover) {
  ojson doc;
  auto cycles = ojson::array();
  for (const Cycle& c : cover.cycles) {
    ojson item;
    item["root"] = c.root;
    item["route"] = c.route;
    item["weight"] = c.weight;
    cycles.push_back(std::move(item));
  }
  doc["cycles"] = std::move(cycles);
  doc["max_weight"] = cover.max_weight;
  return doc;
}

// Shortest round-trip representation, as in the JSON output.
std::string number(double x) {
  return ojson(x).dump();
}

}  // namespace

std::string cover_to_json(const CycleCover& cover) {
  return cover_json(cover).dump(2) + "\n";
}

std::string solution_to_json(const Solution& solution, bool include_timing) {
  ojson doc = cover_json(solution.cover);
  doc["objective"] = solution.objective;
  doc["candidate_id"] = solution.candidate_id;
  doc["epsilon"] = solution.epsilon;
  doc["candidates"] = solution.stats.candidates;
  doc["iterations"] = solution.stats.iterations;
  doc["elapsed_ms"] = include_timing ? solution.stats.elapsed_ms : 0.0;
  return doc.dump(2) + "\n";
}

std::string trace_to_csv(const Solution& solution) {
  std::string out = "candidate,ell,a,b,lambda,tree_count,feasible,cover_weight\n";
  for (const SearchTrace& trace : solution.traces) {
    for (const SearchIteration& it : trace.iterations) {
      out += std::to_string(trace.candidate_id) + ',' + std::to_string(it.ell) + ',' + number(it.a) +
             ',' + number(it.b) + ',' + number(it.lambda) + ',' + std::to_string(it.tree_count) + ',' +
             (it.feasible ? "1" : "0") + ',' + (it.cover_weight ? number(*it.cover_weight) : "") + '\n';
    }
  }
  return out;
}

std::string report_to_json(const ValidationReport& report) {
  ojson doc;
  doc["ok"] = report.ok();
  auto list = ojson::array();
  for (const Violation& v : report.violations()) {
    ojson item;
    item["kind"] = std::string(to_string(v.kind));
    item["message"] = v.message;
    item["witness"] = v.witness;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

namespace {

void write_vertices(std::ostringstream& out, const MetricInstance& inst) {
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    out << "  " << v;
    if (inst.is_depot(v)) out << " [shape=box, style=filled, fillcolor=\"#f4a6a6\"]";
    out << ";\n";
  }
}

}  // namespace

std::string forest_to_dot(const RootedForest& forest, const MetricInstance& inst, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  write_vertices(out, inst);
  for (const Tree& t : forest.trees)
    for (const Edge& e : t.edges) out << "  " << e.u << " -- " << e.v << " [label=\"" << number(e.weight) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string cover_to_dot(const CycleCover& cover, const MetricInstance& inst, std::string_view name) {
  static constexpr std::array<const char*, 10> palette{
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream out;
  out << "graph " << name << " {\n";
  write_vertices(out, inst);
  for (std::size_t c = 0; c < cover.cycles.size(); ++c) {
    const auto& route = cover.cycles[c].route;
    const char* color = palette[c % palette.size()];
    for (std::size_t i = 1; i < route.size(); ++i)
      out << "  " << route[i - 1] << " -- " << route[i] << " [color=\"" << color << "\", label=\""
          << number(inst.weight(route[i - 1], route[i])) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mmcc

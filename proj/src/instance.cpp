#include "mmcc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "mmcc/errors.hpp"

namespace mmcc {

bool approx_equal(double a, double b, double rel) noexcept {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::malformed: return "malformed";
    case ViolationKind::negative_weight: return "negative_weight";
    case ViolationKind::non_finite_weight: return "non_finite_weight";
    case ViolationKind::nonzero_diagonal: return "nonzero_diagonal";
    case ViolationKind::asymmetric: return "asymmetric";
    case ViolationKind::triangle_inequality: return "triangle_inequality";
    case ViolationKind::no_depots: return "no_depots";
    case ViolationKind::too_few_robots: return "too_few_robots";
    case ViolationKind::epsilon_out_of_range: return "epsilon_out_of_range";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::too_many_cycles: return "too_many_cycles";
    case ViolationKind::bad_root: return "bad_root";
    case ViolationKind::bad_route: return "bad_route";
    case ViolationKind::depot_count: return "depot_count";
    case ViolationKind::uncovered_vertex: return "uncovered_vertex";
    case ViolationKind::shared_edge: return "shared_edge";
    case ViolationKind::weight_mismatch: return "weight_mismatch";
  }
  return "unknown";
}

void ValidationReport::add(ViolationKind kind, std::string message, std::vector<Vertex> witness) {
  violations_.push_back({kind, std::move(message), std::move(witness)});
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations_) {
    out += "  [";
    out += mmcc::to_string(v.kind);
    out += "] ";
    out += v.message;
    out += '\n';
  }
  return out;
}

MetricInstance::MetricInstance(WeightMatrix weights, std::vector<Vertex> depots, std::size_t k,
                               double epsilon)
    : weights_(std::make_shared<const WeightMatrix>(std::move(weights))),
      depots_(std::move(depots)),
      k_(k),
      epsilon_(epsilon) {
  const std::size_t n = weights_->size();
  std::sort(depots_.begin(), depots_.end());
  if (std::adjacent_find(depots_.begin(), depots_.end()) != depots_.end())
    throw std::invalid_argument("duplicate depot id");
  if (!depots_.empty() && depots_.back() >= n)
    throw std::invalid_argument("depot id " + std::to_string(depots_.back()) +
                                " out of range for n = " + std::to_string(n));
  depot_flag_.assign(n, 0);
  for (Vertex d : depots_) depot_flag_[d] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!depot_flag_[v]) sites_.push_back(v);
  for (Vertex i = 0; i < n; ++i)
    for (double w : weights_->row(i))
      if (std::isfinite(w)) max_weight_ = std::max(max_weight_, w);
}

MetricInstance MetricInstance::with_epsilon(double epsilon) const {
  MetricInstance copy = *this;
  copy.epsilon_ = epsilon;
  return copy;
}

MetricInstance MetricInstance::with_robot_count(std::size_t k) const {
  MetricInstance copy = *this;
  copy.k_ = k;
  return copy;
}

namespace {

// Caps the number of individual witnesses recorded per violation kind.
class CappedReporter {
 public:
  CappedReporter(ValidationReport& report, ViolationKind kind, std::size_t cap = 8)
      : report_(report), kind_(kind), cap_(cap) {}

  void add(std::string message, std::vector<Vertex> witness) {
    if (count_++ < cap_) report_.add(kind_, std::move(message), std::move(witness));
  }

  ~CappedReporter() {
    if (count_ > cap_)
      report_.add(kind_, "... and " + std::to_string(count_ - cap_) + " more");
  }

 private:
  ValidationReport& report_;
  ViolationKind kind_;
  std::size_t cap_;
  std::size_t count_ = 0;
};

std::string pair_name(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

ValidationReport validate_raw_graph(const RawSiteGraph& raw) {
  ValidationReport report;
  const std::size_t n = raw.vertex_count;
  if (n == 0) report.add(ViolationKind::malformed, "graph has no vertices");
  {
    CappedReporter bad(report, ViolationKind::malformed);
    for (const Edge& e : raw.edges) {
      if (e.u >= n || e.v >= n)
        bad.add("edge " + pair_name(e.u, e.v) + " has a vertex id out of range", {e.u, e.v});
      else if (e.u == e.v)
        bad.add("self-loop at vertex " + std::to_string(e.u), {e.u});
    }
  }
  {
    CappedReporter neg(report, ViolationKind::negative_weight);
    CappedReporter nan(report, ViolationKind::non_finite_weight);
    for (const Edge& e : raw.edges) {
      if (!std::isfinite(e.weight))
        nan.add("edge " + pair_name(e.u, e.v) + " has a non-finite weight", {e.u, e.v});
      else if (e.weight < 0.0)
        neg.add("edge " + pair_name(e.u, e.v) + " has negative weight " + std::to_string(e.weight),
                {e.u, e.v});
    }
  }
  if (raw.depot_ids.empty()) report.add(ViolationKind::no_depots, "depot set is empty");
  for (Vertex d : raw.depot_ids)
    if (d >= n) report.add(ViolationKind::malformed, "depot id " + std::to_string(d) + " out of range", {d});
  return report;
}

WeightMatrix metric_closure(const RawSiteGraph& raw) {
  if (auto report = validate_raw_graph(raw);
      report.has(ViolationKind::malformed) || report.has(ViolationKind::negative_weight) ||
      report.has(ViolationKind::non_finite_weight))
    throw ValidationError(std::move(report));

  const std::size_t n = raw.vertex_count;
  std::vector<std::vector<std::pair<Vertex, double>>> adjacency(n);
  for (const Edge& e : raw.edges) {
    adjacency[e.u].emplace_back(e.v, e.weight);
    adjacency[e.v].emplace_back(e.u, e.weight);
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  WeightMatrix dist(n, inf);
  using Entry = std::pair<double, Vertex>;
  for (Vertex source = 0; source < n; ++source) {
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist.at(source, source) = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist(source, u)) continue;
      for (auto [v, w] : adjacency[u]) {
        if (d + w < dist(source, v)) {
          dist.at(source, v) = d + w;
          queue.emplace(d + w, v);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (dist(source, v) == inf) throw DisconnectedGraph(source, v);
  }
  // Dijkstra from both ends can disagree in the last bit; keep the matrix symmetric.
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) dist.set_symmetric(i, j, std::min(dist(i, j), dist(j, i)));
  return dist;
}

ValidationReport validate_instance(const MetricInstance& inst) {
  ValidationReport report;
  const std::size_t n = inst.vertex_count();
  const WeightMatrix& w = inst.weights();

  if (n == 0) report.add(ViolationKind::malformed, "instance has no vertices");

  bool finite_nonnegative = true;
  {
    CappedReporter nan(report, ViolationKind::non_finite_weight);
    CappedReporter neg(report, ViolationKind::negative_weight);
    CappedReporter diag(report, ViolationKind::nonzero_diagonal);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        const double x = w(i, j);
        if (!std::isfinite(x)) {
          nan.add("w" + pair_name(i, j) + " is not finite", {i, j});
          finite_nonnegative = false;
        } else if (x < 0.0) {
          neg.add("w" + pair_name(i, j) + " = " + std::to_string(x) + " is negative", {i, j});
          finite_nonnegative = false;
        }
      }
      if (w(i, i) != 0.0) diag.add("w" + pair_name(i, i) + " is not zero", {i});
    }
  }

  {
    CappedReporter asym(report, ViolationKind::asymmetric);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (!approx_equal(w(i, j), w(j, i)))
          asym.add("w" + pair_name(i, j) + " != w" + pair_name(j, i), {i, j});
  }

  if (finite_nonnegative) {
    CappedReporter tri(report, ViolationKind::triangle_inequality);
    for (Vertex i = 0; i < n; ++i) {
      const auto row_i = w.row(i);
      for (Vertex j = i + 1; j < n; ++j) {
        const double direct = row_i[j];
        for (Vertex l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          const double detour = row_i[l] + w(l, j);
          if (direct > detour + kRelativeTolerance * std::max(direct, detour))
            tri.add("w" + pair_name(i, j) + " = " + std::to_string(direct) + " exceeds w" +
                        pair_name(i, l) + " + w" + pair_name(l, j) + " = " + std::to_string(detour),
                    {i, l, j});
        }
      }
    }
  }

  const std::size_t m = inst.depot_count();
  if (m == 0) report.add(ViolationKind::no_depots, "depot set is empty");
  if (inst.robot_count() < m)
    report.add(ViolationKind::too_few_robots,
               "k = " + std::to_string(inst.robot_count()) + " < m = " + std::to_string(m) +
                   ": no cycle cover with one depot per cycle exists");
  if (!(inst.epsilon() > 0.0 && inst.epsilon() < 1.0))
    report.add(ViolationKind::epsilon_out_of_range,
               "epsilon = " + std::to_string(inst.epsilon()) + " is not in (0, 1)");
  return report;
}

}  // namespace mmcc

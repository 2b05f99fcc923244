#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mmcc/cyclegen.hpp"
#include "mmcc/decompose.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/planner.hpp"

using namespace mmcc;
using namespace mmcc::testing;

namespace {

DecomposedForest forest_of(std::vector<Tree> trees, double lambda = 1.0) {
  return DecomposedForest{std::move(trees), lambda, 0};
}

}  // namespace

TEST_CASE("attach_depots") {
  const auto inst = line4();
  SUBCASE("depot-less {1,2} attaches to depot 0 on a tie with depot 3") {
    const auto out = attach_depots(forest_of({Tree::from_edges(std::nullopt, {{1, 2, 1.0}})}), inst);
    REQUIRE(out.size() == 1);
    CHECK(out[0].root == Vertex{0});
    CHECK(out[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(out[0].weight == 2.0);
  }
  SUBCASE("a tree holding depot 3 keeps root 3") {
    const auto out = attach_depots(forest_of({Tree::from_edges(Vertex{3}, {{2, 3, 1.0}})}), inst);
    REQUIRE(out.size() == 1);
    CHECK(out[0].root == Vertex{3});
    CHECK(out[0].edges.size() == 1);
  }
  SUBCASE("singleton site gains an edge to its nearest depot") {
    const auto out = attach_depots(forest_of({Tree::from_edges(std::nullopt, {}, {2})}), inst);
    REQUIRE(out.size() == 1);
    CHECK(out[0].root == Vertex{3});
    CHECK(out[0].vertices == std::vector<Vertex>{2, 3});
    CHECK(out[0].weight == 1.0);
  }
  SUBCASE("multi-depot tree is rooted at its lowest depot") {
    const auto out =
        attach_depots(forest_of({Tree::from_edges(Vertex{3}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})}), inst);
    CHECK(out[0].root == Vertex{0});
  }
}

TEST_CASE("tree_to_cycle") {
  const auto inst = line_instance({0, 1, 2, 3}, {0}, 1);
  SUBCASE("path 0-1-2 rooted at 0") {
    const auto c = tree_to_cycle(Tree::from_edges(Vertex{0}, {{0, 1, 1}, {1, 2, 1}}), inst);
    CHECK(c.route == std::vector<Vertex>{0, 1, 2, 0});
    CHECK(c.weight == 4.0);
  }
  SUBCASE("singleton depot") {
    const auto c = tree_to_cycle(Tree::from_edges(Vertex{0}, {}), inst);
    CHECK(c.route == std::vector<Vertex>{0});
    CHECK(c.weight == 0.0);
  }
  SUBCASE("one edge is walked twice") {
    const auto c = tree_to_cycle(Tree::from_edges(Vertex{0}, {{0, 3, 3}}), inst);
    CHECK(c.route == std::vector<Vertex>{0, 3, 0});
    CHECK(c.weight == 6.0);
  }
  SUBCASE("children are visited in ascending id") {
    const auto c = tree_to_cycle(Tree::from_edges(Vertex{0}, {{0, 3, 3}, {0, 1, 1}, {1, 2, 1}}), inst);
    CHECK(c.route == std::vector<Vertex>{0, 1, 2, 3, 0});
  }
  SUBCASE("the anchor is passed through but not visited") {
    Tree t = Tree::from_edges(Vertex{0}, {{0, 1, 1}, {1, 2, 1}});
    t.anchor = Vertex{1};
    const auto c = tree_to_cycle(t, inst);
    CHECK(c.route == std::vector<Vertex>{0, 2, 0});
  }
}

TEST_CASE("cover_from_forest on line4") {
  const auto inst = line4();
  const auto fstar = build_rooted_spanning_forest(inst);
  const auto cands = enumerate_candidates(fstar, build_connector_edges(inst, fstar));
  SUBCASE("F* gives two short cycles") {
    const auto cover = cover_from_forest(decompose_forest(cands[0], 1.0), inst);
    REQUIRE(cover.size() == 2);
    CHECK(cover.cycles[0].route == std::vector<Vertex>{0, 1, 0});
    CHECK(cover.cycles[0].weight == 2.0);
    CHECK(cover.cycles[1].route == std::vector<Vertex>{3, 2, 3});
    CHECK(cover.cycles[1].weight == 2.0);
    CHECK(cover.max_weight == 2.0);
  }
  SUBCASE("the spanning path gives one tour") {
    const auto cover = cover_from_forest(decompose_forest(cands[1], 2.0), inst);
    REQUIRE(cover.size() == 1);
    CHECK(cover.cycles[0].route == std::vector<Vertex>{0, 1, 2, 3, 0});
    CHECK(cover.cycles[0].weight == 6.0);
  }
}

TEST_CASE("all-depot instance gives zero-weight singleton cycles") {
  const auto inst = line_instance({0, 4, 9}, {0, 1, 2}, 3);
  const auto fstar = build_rooted_spanning_forest(inst);
  const auto cands = enumerate_candidates(fstar, build_connector_edges(inst, fstar));
  const auto cover = cover_from_forest(decompose_forest(cands[0], 1.0), inst);
  REQUIRE(cover.size() == 3);
  for (const Cycle& c : cover.cycles) {
    CHECK(c.route.size() == 1);
    CHECK(c.weight == 0.0);
  }
  CHECK(cover.max_weight == 0.0);
}

TEST_CASE("property: cycles cost at most twice their tree and share only depots") {
  Rng rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const std::size_t m = 1 + rng() % std::min<std::size_t>(n, 4);
    const auto inst = random_instance(rng, family_for(trial), n, m, n);
    const auto fstar = build_rooted_spanning_forest(inst);
    for (const auto& cand : enumerate_candidates(fstar, build_connector_edges(inst, fstar))) {
      const double wmax = cand.forest.max_edge_weight();
      const double lambda = wmax > 0 ? wmax * (1.0 + 2.0 * unit(rng)) : 1.0;
      const auto decomposed = decompose_forest(cand, lambda);
      const auto rooted = attach_depots(decomposed, inst);
      REQUIRE(rooted.size() == decomposed.size());
      std::vector<std::set<Vertex>> visited;
      for (const Tree& t : rooted) {
        const Cycle c = tree_to_cycle(t, inst);
        CHECK(c.weight <= 2.0 * t.weight * (1 + 1e-9) + 1e-12);
        CHECK(approx_equal(c.weight, route_weight(c.route, inst)));
        visited.emplace_back(c.route.begin(), c.route.end());
      }
      for (std::size_t a = 0; a < visited.size(); ++a)
        for (std::size_t b = a + 1; b < visited.size(); ++b) {
          std::vector<Vertex> common;
          std::set_intersection(visited[a].begin(), visited[a].end(), visited[b].begin(), visited[b].end(),
                                std::back_inserter(common));
          CHECK(common.size() <= 1);
          for (Vertex v : common) CHECK(inst.is_depot(v));
        }
      const auto cover = cover_from_forest(decomposed, inst);
      // k = n, so the cycle count never binds.
      const auto report = validate_cover(cover, inst);
      CHECK_MESSAGE(report.ok(), report.to_string());
    }
  }
}

TEST_CASE("property: attaching any site to its nearest depot costs at most half of lambda*") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t m = 1 + rng() % 2;
    const auto inst = random_instance(rng, family_for(trial), n, m, m + rng() % 2);
    const double lambda_star = exact_solve(inst).lambda_star;
    for (Vertex v : inst.sites()) {
      double nearest = inst.weight(v, inst.depots()[0]);
      for (Vertex d : inst.depots()) nearest = std::min(nearest, inst.weight(v, d));
      CHECK(2.0 * nearest <= lambda_star * (1 + 1e-9));
    }
  }
}

#include "tdobs/treedepth.hpp"

#include <random>
#include <thread>

#include "doctest.h"
#include "test_util.hpp"
#include "tdobs/oracle.hpp"

using namespace tdobs;
using test::complete;
using test::cycle;
using test::path;

namespace {

const TreedepthSolver solver;

void check_certificate(const Graph& g, const TreedepthResult& result) {
  REQUIRE(verify_forest(g, result.certificate));
  REQUIRE(result.certificate.height() == result.value);
}

}  // namespace

TEST_CASE("treedepth of the basic families") {
  CHECK(solver.treedepth(Graph(1)).value == 1);
  CHECK(solver.treedepth(Graph(7)).value == 1);
  for (int n = 2; n <= 8; ++n) CHECK(solver.treedepth(complete(n)).value == n);
  CHECK(solver.treedepth(path(4)).value == 3);
  CHECK(solver.treedepth(cycle(4)).value == 3);
  CHECK(solver.treedepth(path(7)).value == 3);
  CHECK(solver.treedepth(path(8)).value == 4);
  CHECK(solver.treedepth(test::star(9)).value == 2);
  CHECK_THROWS_AS(solver.treedepth(Graph(0)), std::invalid_argument);
}

TEST_CASE("td_at_most matches the exact value") {
  CHECK_FALSE(solver.td_at_most(complete(4), 3));
  CHECK(solver.td_at_most(path(4), 3));
  CHECK_FALSE(solver.td_at_most(path(4), 0));
  CHECK(solver.td_at_most(Graph(0), 0));

  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = test::random_graph(rng, n, 0.15 + 0.7 * (trial % 8) / 7.0);
    const int value = solver.treedepth(g).value;
    for (int k = 0; k <= n + 1; ++k)
      CHECK(solver.td_at_most(g, k) == (value <= k));
  }
}

TEST_CASE("solver agrees with the plain recursion on all graphs up to 6") {
  for (int n = 1; n <= 6; ++n) {
    test::for_each_labelled_graph(n, [](const Graph& g) {
      const TreedepthResult result = solver.treedepth(g);
      REQUIRE(result.value == oracle::treedepth(g));
      REQUIRE(verify_forest(g, result.certificate));
      REQUIRE(result.certificate.height() == result.value);
    });
  }
}

TEST_CASE("solver agrees with the plain recursion on connected 7-vertex classes") {
  const auto classes = oracle::all_classes(7, {}, 2);
  int connected = 0;
  for (const CanonicalForm& form : classes) {
    const Graph g = from_graph6(form.line);
    if (!is_connected(g)) continue;
    ++connected;
    const TreedepthResult result = solver.treedepth(g);
    REQUIRE(result.value == oracle::treedepth(g));
    check_certificate(g, result);
  }
  CHECK(connected == 853);
}

TEST_CASE("treedepth equals the max over components") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = test::random_graph(rng, n, 0.12);
    int by_parts = 0;
    for (const VertexSet comp : components(g))
      by_parts =
          std::max(by_parts, solver.treedepth(induced_subgraph(g, comp)).value);
    CHECK(solver.treedepth(g).value == by_parts);
  }
}

TEST_CASE("treedepth is monotone under deletions and contractions") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = test::random_graph(rng, n, 0.4);
    const int value = solver.treedepth(g).value;
    const int v = static_cast<int>(rng() % n);
    CHECK(solver.td_at_most(delete_vertex(g, v), value));
    const auto es = edges(g);
    if (!es.empty()) {
      const auto [a, b] = es[rng() % es.size()];
      CHECK(solver.treedepth(delete_edge(g, a, b)).value <= value);
      CHECK(solver.treedepth(contract_edge(g, a, b)).value <= value);
    }
  }
}

TEST_CASE("certificates cover every edge and match the value on random graphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = test::random_graph(rng, n, 0.3);
    check_certificate(g, solver.treedepth(g));
  }
}

TEST_CASE("verify_forest spots bad forests") {
  const Graph k2 = complete(2);
  EliminationForest chain{{-1, 0}};
  CHECK(verify_forest(k2, chain));
  CHECK(chain.height() == 2);
  CHECK(chain.roots() == std::vector<int>{0});

  EliminationForest two_roots{{-1, -1}};
  CHECK_FALSE(verify_forest(k2, two_roots));  // the edge is not covered

  const Graph p3 = path(3);
  EliminationForest rooted_center{{1, -1, 1}};
  CHECK(verify_forest(p3, rooted_center));
  CHECK(rooted_center.height() == 2);

  EliminationForest cycle_forest{{1, 0}};
  CHECK_FALSE(verify_forest(k2, cycle_forest));

  EliminationForest out_of_range{{-1, 7}};
  CHECK_THROWS_AS(verify_forest(k2, out_of_range), std::out_of_range);

  EliminationForest wrong_size{{-1}};
  CHECK_FALSE(verify_forest(k2, wrong_size));
}

TEST_CASE("lower_bound is valid and hits the documented cases") {
  CHECK(lower_bound(complete(4)) >= 4);
  CHECK(lower_bound(Graph(5)) == 1);
  CHECK(lower_bound(complete(2)) == 2);
  CHECK(lower_bound(Graph(0)) == 0);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = test::random_graph(rng, n, 0.5);
    CHECK(lower_bound(g) <= solver.treedepth(g).value);
  }
}

TEST_CASE("memo capacity and cache-off mode do not change answers") {
  const TreedepthSolver tiny_cache({true, 40});
  const TreedepthSolver no_cache({false, 0});
  std::mt19937 rng(606);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = test::random_graph(rng, n, 0.35);
    const int reference = solver.treedepth(g).value;
    CHECK(tiny_cache.treedepth(g).value == reference);
    CHECK(no_cache.treedepth(g).value == reference);
  }
  CHECK(tiny_cache.memo_size() <= 40);
}

TEST_CASE("concurrent solving is deterministic") {
  std::mt19937 rng(2024);
  std::vector<Graph> graphs;
  std::vector<int> expected;
  for (int i = 0; i < 200; ++i) {
    graphs.push_back(
        test::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3));
    expected.push_back(solver.treedepth(graphs.back()).value);
  }
  const TreedepthSolver shared;
  std::vector<int> got(graphs.size(), -1);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < graphs.size(); i += 4)
        got[i] = shared.treedepth(graphs[i]).value;
    });
  }
  for (auto& thread : threads) thread.join();
  CHECK(got == expected);
}

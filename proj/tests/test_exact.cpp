#include <doctest.h>

#include <random>

#include "kxcover/errors.hpp"
#include "kxcover/exact.hpp"
#include "kxcover/verify.hpp"

using namespace kxcover;

namespace {

GeneralGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.emplace_back(u, v);
    }
  }
  return GeneralGraph(n, edges);
}

GeneralGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return GeneralGraph(n, edges);
}

GeneralGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return GeneralGraph(10, edges);
}

ExactOptions bnb() {
  ExactOptions o;
  o.engine = ExactEngine::kBranchAndBound;
  return o;
}

}  // namespace

TEST_CASE("general graph validation") {
  CHECK_THROWS_AS(GeneralGraph(3, {{0, 0}}), ParseError);
  CHECK_THROWS_AS(GeneralGraph(3, {{0, 1}, {1, 0}}), ParseError);
  CHECK_THROWS_AS(GeneralGraph(3, {{0, 3}}), ParseError);
  const GeneralGraph g(3, {{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.other(0, 0) == 1);
}

TEST_CASE("pruning and components") {
  // Triangle 0-1-2 with a tail 2-3-4 and an isolated vertex 5.
  const GeneralGraph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  const auto pruned = prune_low_degree(g);
  CHECK(pruned.vertex_count() == 3);
  CHECK(pruned.edge_count() == 3);
  CHECK(std::vector<int>(pruned.labels().begin(), pruned.labels().end()) == std::vector<int>{0, 1, 2});

  CHECK(prune_low_degree(GeneralGraph(4, {{0, 1}, {1, 2}, {2, 3}})).vertex_count() == 0);

  const GeneralGraph two(7, {{4, 5}, {5, 6}, {6, 4}, {0, 1}, {1, 2}, {2, 0}});
  const auto parts = components(two);
  // Vertex 3 is isolated and forms its own component.
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].label(0) == 0);
  CHECK(parts[1].vertex_count() == 1);
  CHECK(parts[1].label(0) == 3);
  CHECK(parts[2].label(0) == 4);
  REQUIRE(components(prune_low_degree(two)).size() == 2);
  CHECK(components(prune_low_degree(two))[1].label(0) == 4);
}

TEST_CASE("known values") {
  for (const auto& opt : {ExactOptions{}, bnb()}) {
    CHECK(exact_n(cycle(5), opt).value == 5);
    CHECK(exact_n(petersen(), opt).value == 10);
    CHECK(exact_n(GeneralGraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}), opt).value == 3);
    CHECK(exact_n(GeneralGraph(4, {{0, 1}, {1, 2}, {2, 3}}), opt).value == 0);
    CHECK(exact_n(GeneralGraph(0, {}), opt).value == 0);
  }
  CHECK(brute_force_n(petersen()) == 10);
  CHECK(brute_force_n(cycle(7)) == 7);
  CHECK_THROWS_AS(brute_force_n(cycle(21)), PreconditionError);
}

TEST_CASE("both engines agree with the brute-force oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const double p = 0.2 * (1 + static_cast<int>(rng() % 3));
    const auto g = random_graph(rng, n, p);
    const int want = brute_force_n(g);
    const auto m = exact_n(g);
    const auto b = exact_n(g, bnb());
    REQUIRE(m.value == want);
    REQUIRE(b.value == want);
    for (const auto* r : {&m, &b}) {
      const auto report = verify_2_regular_subgraph(g, r->witness);
      REQUIRE(report.overall());
      REQUIRE(report.covered == want);
    }
  }
}

TEST_CASE("n(G) is additive over components and unchanged by pruning") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 18, 0.12);
    int sum = 0;
    for (const auto& c : components(g)) sum += exact_n(c).value;
    CHECK(exact_n(g).value == sum);
    CHECK(exact_n(prune_low_degree(g)).value == exact_n(g).value);
  }
}

TEST_CASE("witness edges refer to the input vertices") {
  // Triangle on 4, 6, 9 plus a pendant path; only the triangle survives.
  const GeneralGraph g(10, {{0, 1}, {4, 6}, {6, 9}, {9, 4}, {9, 2}});
  const auto r = exact_n(g);
  CHECK(r.value == 3);
  CHECK(r.witness == std::vector<Edge>{{4, 6}, {6, 9}, {9, 4}});
}

TEST_CASE("branch-and-bound honours its node budget") {
  std::mt19937_64 rng(5);
  const auto g = random_graph(rng, 60, 0.1);
  ExactOptions o = bnb();
  o.node_budget = 1;
  try {
    exact_n(g, o);
    // A tiny instance may finish at the root; this one should not.
    FAIL("expected the budget to run out");
  } catch (const BudgetExceeded& e) {
    CHECK(e.best_found() <= e.upper_bound());
    CHECK(e.upper_bound() <= g.vertex_count());
    CHECK(e.best_found() <= exact_n(g).value);
    CHECK(exact_n(g).value <= e.upper_bound());
  }
}

#include <doctest.h>

#include <random>

#include "kxcover/matching.hpp"
#include "oracles.hpp"

using namespace kxcover;

namespace {

std::pair<int, std::int64_t> measure(int n, const std::vector<WeightedEdge>& edges,
                                     const std::vector<int>& mate) {
  REQUIRE(static_cast<int>(mate.size()) == n);
  int size = 0;
  std::int64_t weight = 0;
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) continue;
    REQUIRE(mate[mate[v]] == v);
    if (v > mate[v]) continue;
    bool found = false;
    std::int64_t best = 0;
    for (const auto& e : edges) {
      if ((e.u == v && e.v == mate[v]) || (e.v == v && e.u == mate[v])) {
        best = found ? std::max(best, e.weight) : e.weight;
        found = true;
      }
    }
    REQUIRE(found);
    ++size;
    weight += best;
  }
  return {size, weight};
}

}  // namespace

TEST_CASE("blossom on an odd cycle with a pendant") {
  // Triangle 0-1-2 with pendant 3 on vertex 2: perfect matching needs the blossom.
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}};
  const auto mate = max_weight_matching(4, edges, true);
  CHECK(measure(4, edges, mate) == std::make_pair(2, std::int64_t{2}));
  CHECK(mate[3] == 2);
}

TEST_CASE("weight beats cardinality unless cardinality is required") {
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 5}, {2, 3, 1}};
  CHECK(measure(4, edges, max_weight_matching(4, edges, false)) == std::make_pair(1, std::int64_t{5}));
  CHECK(measure(4, edges, max_weight_matching(4, edges, true)) == std::make_pair(2, std::int64_t{2}));
}

TEST_CASE("matching agrees with exhaustive search on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const double density = 0.2 + 0.15 * static_cast<double>(rng() % 5);
    std::bernoulli_distribution keep(density);
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (keep(rng)) edges.push_back({u, v, static_cast<std::int64_t>(rng() % 4)});
      }
    }
    for (bool card : {false, true}) {
      const auto mate = max_weight_matching(n, edges, card);
      const auto got = measure(n, edges, mate);
      const auto want = oracle::brute_matching(n, edges, card);
      if (card) {
        REQUIRE(got == want);
      } else {
        REQUIRE(got.second == want.second);
      }
    }
  }
}

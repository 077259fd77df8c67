#include <doctest.h>

#include <random>
#include <set>

#include "kxcover/errors.hpp"
#include "kxcover/skeleton.hpp"
#include "oracles.hpp"

using namespace kxcover;

namespace {

SkeletonGraph triangle() { return SkeletonGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("skeleton rejects duplicates and bad endpoints") {
  CHECK_THROWS_AS(SkeletonGraph(2, {{0, 1}, {1, 0}}), ParseError);
  CHECK_THROWS_AS(SkeletonGraph(2, {{0, 0}, {0, 0}}), ParseError);
  CHECK_THROWS_AS(SkeletonGraph(2, {{0, 2}}), ParseError);
  CHECK_THROWS_AS(SkeletonGraph(0, {}), ParseError);
  const SkeletonGraph s(2, {{0, 0}, {0, 1}});
  CHECK(s.loop_count() == 1);
  CHECK(s.adjacent(1, 0));
  CHECK_FALSE(s.adjacent(1, 1));
  CHECK(s.find_edge(1, 0) == 1);
  CHECK(s.incident(0).size() == 2);
}

TEST_CASE("allocation rejects negative entries") {
  CHECK_THROWS_AS(NodeAllocation({1, -1}), ParseError);
  CHECK(NodeAllocation({3, 0, 4}).total() == 7);
}

TEST_CASE("incidence of the example triangle") {
  const auto z = build_incidence_matrix(triangle());
  const auto y = z.apply(EdgeCoefficients({4, 2, 2}));
  CHECK(y.integral());
  CHECK(y.to_integers() == std::vector<std::int64_t>{3, 3, 2});

  CHECK(z.apply(EdgeCoefficients::zeros(3)).to_integers() == std::vector<std::int64_t>{0, 0, 0});

  const auto half = z.apply(EdgeCoefficients({1, 0, 0}));
  CHECK(half.half_integer_indices() == std::vector<int>{0, 1});
  CHECK(half.to_string() == "1/2 1/2 0");
  CHECK_THROWS_AS(half.to_integers(), InternalContradiction);

  CHECK_THROWS_AS(z.apply(EdgeCoefficients({1, 2})), DimensionError);
}

TEST_CASE("columns of Z sum to one and 1'Zc = 1'c") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 6);
    const auto s = oracle::random_skeleton(rng, q, 0.5);
    const IncidenceMatrix z(s);
    for (int j = 0; j < z.cols(); ++j) {
      int sum = 0;
      for (int i = 0; i < z.rows(); ++i) sum += z.twice(i, j);
      REQUIRE(sum == 2);
    }
    EdgeCoefficients c = EdgeCoefficients::zeros(s.edge_count());
    for (auto& v : c.values) v = static_cast<std::int64_t>(rng() % 10);
    CHECK(z.apply(c).twice_total() == 2 * c.total());
  }
}

TEST_CASE("blow-up edges are exactly the admissible pairs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 5);
    const auto s = oracle::random_skeleton(rng, q, 0.5);
    std::vector<std::int64_t> xs(q);
    for (auto& v : xs) v = static_cast<std::int64_t>(rng() % 5);
    const BlowupGraph k(s, NodeAllocation(xs));

    std::set<std::pair<std::int64_t, std::int64_t>> listed;
    std::int64_t prev_v = -1, prev_w = -1;
    k.for_each_edge([&](std::int64_t v, std::int64_t w) {
      CHECK(v < w);
      CHECK(std::make_pair(prev_v, prev_w) < std::make_pair(v, w));
      prev_v = v;
      prev_w = w;
      listed.emplace(v, w);
    });
    CHECK(static_cast<std::int64_t>(listed.size()) == k.edge_count());

    // Part membership from cumulative sums, independent of the class.
    std::vector<int> part;
    for (int p = 0; p < q; ++p) part.insert(part.end(), xs[p], p);
    REQUIRE(static_cast<std::int64_t>(part.size()) == k.vertex_count());
    for (std::int64_t v = 0; v < k.vertex_count(); ++v) {
      CHECK(k.part_of(v) == part[v]);
      for (std::int64_t w = v + 1; w < k.vertex_count(); ++w) {
        const bool admissible = s.adjacent(part[v], part[w]);
        CHECK(listed.count({v, w}) == static_cast<std::size_t>(admissible));
        CHECK(k.adjacent(v, w) == admissible);
      }
    }
  }
}

TEST_CASE("blow-up is monotone in x") {
  const SkeletonGraph s(3, {{0, 0}, {0, 1}, {1, 2}});
  const BlowupGraph small(s, NodeAllocation({2, 1, 3}));
  const BlowupGraph large(s, NodeAllocation({4, 2, 3}));
  auto embed = [&](std::int64_t v) {
    const int p = small.part_of(v);
    return large.offset(p) + (v - small.offset(p));
  };
  for (std::int64_t v = 0; v < small.vertex_count(); ++v) {
    for (std::int64_t w = 0; w < small.vertex_count(); ++w) {
      if (v != w) CHECK(small.adjacent(v, w) == large.adjacent(embed(v), embed(w)));
    }
  }
}

TEST_CASE("blow-up edge count") {
  const SkeletonGraph s(2, {{0, 0}, {0, 1}});
  CHECK(BlowupGraph(s, NodeAllocation({4, 3})).edge_count() == 6 + 12);
  CHECK_THROWS_AS(blow_up(s, NodeAllocation({1, 2, 3})), DimensionError);
}

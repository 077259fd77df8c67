#include <doctest.h>

#include "kxcover/verify.hpp"

using namespace kxcover;

namespace {

const SkeletonGraph kTri(3, {{0, 1}, {1, 2}, {2, 0}});
const SkeletonGraph kLoopPath(3, {{0, 0}, {0, 1}, {1, 2}});

LpSolution record(std::vector<std::int64_t> y, std::vector<std::int64_t> c, std::int64_t objective) {
  LpSolution s;
  s.y = NodeAllocation(std::move(y));
  s.c = EdgeCoefficients(std::move(c));
  s.objective = objective;
  return s;
}

bool passed(const VerificationReport& r, const std::string& name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->passed;
}

}  // namespace

TEST_CASE("lp records") {
  const NodeAllocation x({3, 3, 2});
  const auto good = verify_lp_solution(kTri, x, record({3, 3, 2}, {4, 2, 2}, 8));
  CHECK(good.overall());
  CHECK(passed(good, "optimal"));

  const auto tampered = verify_lp_solution(kTri, x, record({3, 3, 2}, {4, 2, 2}, 9));
  CHECK_FALSE(tampered.overall());
  CHECK_FALSE(passed(tampered, "objective_consistent"));

  const auto over = verify_lp_solution(kTri, NodeAllocation({3, 3, 1}), record({3, 3, 2}, {4, 2, 2}, 8));
  CHECK_FALSE(passed(over, "y_le_x"));

  const auto wrong_y = verify_lp_solution(kTri, x, record({3, 2, 3}, {4, 2, 2}, 8));
  CHECK_FALSE(passed(wrong_y, "y_equals_Zc"));

  const auto half = verify_lp_solution(kTri, x, record({2, 2, 1}, {3, 1, 0}, 4));
  CHECK_FALSE(passed(half, "y_integral"));

  const auto suboptimal = verify_lp_solution(kTri, x, record({1, 1, 0}, {2, 0, 0}, 2));
  CHECK(passed(suboptimal, "y_equals_Zc"));
  CHECK_FALSE(passed(suboptimal, "optimal"));

  CHECK_FALSE(verify_lp_solution(kTri, x, record({3, 3}, {4, 2, 2}, 8)).overall());
  CHECK_FALSE(verify_lp_solution(kTri, x, record({3, 3, 2}, {4, 2, -2}, 8)).overall());
}

TEST_CASE("brute-force lp optimum") {
  CHECK(brute_force_lp_optimum(kTri, NodeAllocation({3, 3, 2})) == 8);
  CHECK(brute_force_lp_optimum(kLoopPath, NodeAllocation({3, 3, 3})) == 9);
  CHECK(brute_force_lp_optimum(SkeletonGraph(2, {{0, 1}}), NodeAllocation({4, 1})) == 2);
  CHECK(brute_force_lp_optimum(SkeletonGraph(1, {}), NodeAllocation({4})) == 0);
}

TEST_CASE("cycle covers") {
  const BlowupGraph k(kLoopPath, NodeAllocation({3, 3, 3}));
  const CycleCover good{{{0, 1, 2}, {3, 6, 4, 7, 5, 8}}};
  const auto r = verify_cycle_cover(k, good, 9);
  CHECK(r.overall());
  CHECK(r.covered == 9);

  CHECK_FALSE(verify_cycle_cover(k, good, 8).overall());
  CHECK(verify_cycle_cover(k, good, std::nullopt).overall());

  const auto two = verify_cycle_cover(k, CycleCover{{{3, 6}}}, std::nullopt);
  CHECK_FALSE(passed(two, "cycle_length_at_least_3"));

  const auto shared = verify_cycle_cover(k, CycleCover{{{0, 1, 2}, {0, 3, 1}}}, std::nullopt);
  CHECK_FALSE(passed(shared, "cycles_disjoint"));

  // 3 and 4 lie in the same loopless part.
  const auto bad_edge = verify_cycle_cover(k, CycleCover{{{3, 4, 6}}}, std::nullopt);
  CHECK_FALSE(passed(bad_edge, "edges_in_host"));

  const auto repeat = verify_cycle_cover(k, CycleCover{{{3, 6, 3, 7}}}, std::nullopt);
  CHECK_FALSE(passed(repeat, "cycles_simple"));

  const auto range = verify_cycle_cover(k, CycleCover{{{0, 1, 9}}}, std::nullopt);
  CHECK_FALSE(passed(range, "vertices_in_range"));

  const BlowupGraph small(SkeletonGraph(1, {{0, 0}}), NodeAllocation({12}));
  const auto many = verify_cycle_cover(small, CycleCover{{{0, 1, 2}, {3, 4, 5}}}, std::nullopt);
  CHECK_FALSE(passed(many, "cycle_count_at_most_q"));
}

TEST_CASE("2-regular witnesses") {
  const GeneralGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto tri = verify_2_regular_subgraph(bowtie, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.overall());
  CHECK(tri.covered == 3);

  const auto path = verify_2_regular_subgraph(bowtie, {{0, 1}, {1, 2}});
  CHECK_FALSE(passed(path, "degree_two"));

  const auto both = verify_2_regular_subgraph(bowtie, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(both.overall());

  const auto foreign = verify_2_regular_subgraph(bowtie, {{0, 1}, {1, 3}, {3, 0}});
  CHECK_FALSE(passed(foreign, "edges_in_graph"));

  const auto twice = verify_2_regular_subgraph(bowtie, {{0, 1}, {1, 0}});
  CHECK_FALSE(passed(twice, "edges_distinct"));

  const auto empty = verify_2_regular_subgraph(bowtie, {});
  CHECK(empty.overall());
  CHECK(empty.covered == 0);
}

TEST_CASE("report text") {
  VerificationReport r;
  r.add("first", true);
  r.add("second", false, "why");
  CHECK_FALSE(r.overall());
  CHECK(r.find("missing") == nullptr);
  const auto text = r.to_string();
  CHECK(text.find("first") != std::string::npos);
  CHECK(text.find("why") != std::string::npos);
}

#include <doctest.h>

#include <filesystem>

#include "kxcover/errors.hpp"
#include "kxcover/io.hpp"

using namespace kxcover;

TEST_CASE("skeleton text") {
  const auto s = parse_skeleton("3 3\n1 1\n1 2\n2 3\n");
  CHECK(s.node_count() == 3);
  REQUIRE(s.edge_count() == 3);
  CHECK(s.edge(0) == SkeletonEdge{0, 0});
  CHECK(s.edge(2) == SkeletonEdge{1, 2});
  CHECK(format_skeleton(s) == "3 3\n1 1\n1 2\n2 3\n");
  CHECK(parse_skeleton("3 0").edge_count() == 0);

  CHECK_THROWS_AS(parse_skeleton(""), ParseError);
  CHECK_THROWS_AS(parse_skeleton("0 0"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("3 1\n1 b\n"), ParseError);
}

TEST_CASE("allocation text") {
  CHECK(parse_allocation("24 7 4 11 6 4\n") == NodeAllocation({24, 7, 4, 11, 6, 4}));
  CHECK(parse_allocation("  3\n3 \n3") == NodeAllocation({3, 3, 3}));
  CHECK(format_allocation(NodeAllocation({3, 0, 6})) == "3 0 6\n");
  CHECK_THROWS_AS(parse_allocation(""), ParseError);
  CHECK_THROWS_AS(parse_allocation("3 -1"), ParseError);
  CHECK_THROWS_AS(parse_allocation("3 x"), ParseError);
  CHECK_THROWS_AS(parse_allocation("3 2.5"), ParseError);
}

TEST_CASE("graph text") {
  const auto g = parse_graph("4 3\n0 1\n1 2\n3 2\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(format_graph(g) == "4 3\n0 1\n1 2\n3 2\n");
  CHECK(parse_graph("2 0").edge_count() == 0);
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("-1 0"), ParseError);
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "kxcover_io_test.txt").string();
  write_file(path, "5 6 7\n");
  CHECK(read_file(path) == "5 6 7\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), ParseError);
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x/y", "1"), ParseError);
}

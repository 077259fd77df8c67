#pragma once

#include <cstdint>
#include <vector>

namespace kxcover {

// Dinic's blocking-flow max-flow on integer capacities. Integer capacities
// give an integer optimal flow.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  /// Adds arc a -> b with capacity cap and returns its handle.
  int add_edge(int a, int b, std::int64_t cap);
  std::int64_t run(int source, int sink);
  /// Flow on the arc returned by add_edge, after run().
  std::int64_t flow(int handle) const;

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
    std::int64_t original;
  };

  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t pushed);

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> handles_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace kxcover

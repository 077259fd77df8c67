#pragma once

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
// with the primal-dual bookkeeping of Galil's O(n^3) formulation). Integer
// weights only; duals are kept at twice their textbook value so they stay
// integral.

#include <cstdint>
#include <vector>

namespace kxcover {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

/// Returns mate[v] (or -1). With max_cardinality, the result is a maximum
/// weight matching among those of maximum cardinality.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

}  // namespace kxcover

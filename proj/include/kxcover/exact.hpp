#pragma once

// Order n(G) of a largest 2-regular subgraph of a simple graph G.
//
// exact_n strips vertices of degree < 2, splits into connected components
// and solves each component either through a weighted-matching reduction
// or by branch-and-bound over vertex selections s_v and edge selections h_e
// with Σ_{e ∈ δ(v)} h_e = 2 s_v. brute_force_n is an independent subset
// enumeration used as an oracle on tiny graphs.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kxcover {

using Edge = std::pair<int, int>;

/// Simple undirected graph: no loops, no duplicate edges. `labels` maps
/// each vertex to a vertex of the graph it was derived from.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  /// Throws ParseError on loops, duplicates or out-of-range endpoints.
  GeneralGraph(int vertex_count, std::vector<Edge> edges, std::vector<int> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  int label(int v) const { return labels_[v]; }
  std::span<const int> labels() const { return labels_; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  /// Edge indices incident to v.
  std::span<const int> incident(int v) const { return incident_[v]; }
  int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

  /// Induced subgraph on `keep` (ascending), labels composed.
  GeneralGraph induced(const std::vector<int>& keep) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> incident_;
};

/// Repeatedly deletes vertices of degree < 2.
GeneralGraph prune_low_degree(const GeneralGraph& g);

/// Connected components, ordered by smallest vertex; isolated vertices are
/// their own components.
std::vector<GeneralGraph> components(const GeneralGraph& g);

inline constexpr int kBruteForceCap = 20;

/// Exhaustive oracle. Throws PreconditionError above kBruteForceCap vertices.
int brute_force_n(const GeneralGraph& g);

enum class ExactEngine {
  kMatching,        // weighted matching on a degree gadget, polynomial
  kBranchAndBound,  // search over s_v, h_e with a cycle-cover bound
};

struct ExactOptions {
  /// Branch-and-bound nodes allowed per call; 0 means unlimited.
  std::int64_t node_budget = 20'000'000;
  ExactEngine engine = ExactEngine::kMatching;
};

struct ExactResult {
  int value = 0;
  std::vector<Edge> witness;  // edges of g forming a 2-regular subgraph on `value` vertices
  std::int64_t nodes = 0;     // branch-and-bound nodes visited
};

/// Throws BudgetExceeded when the node budget runs out.
ExactResult exact_n(const GeneralGraph& g, const ExactOptions& options = {});

/// One graph, no pruning or decomposition, using options.engine.
ExactResult solve_component(const GeneralGraph& g, const ExactOptions& options = {});

/// Each vertex v becomes a pair v1 v2 joined by a weight-0 edge, and each
/// edge uv becomes a path u* - e_u - e_v - v* whose three edges weigh 1,
/// with u* either copy of u. A perfect matching either takes v1 v2 or
/// routes both copies into two distinct edges, so its weight is
/// |E| + (number of vertices of degree 2) and a maximum-weight perfect
/// matching yields n(G).
ExactResult matching_component(const GeneralGraph& g);

}  // namespace kxcover

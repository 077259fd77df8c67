#pragma once

// Skeleton graphs, their incidence matrices and complete S-partite blow-ups.
//
// Node and vertex indices are 0-based throughout the library; the text file
// formats use 1-based skeleton nodes (see io.hpp).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kxcover {

struct SkeletonEdge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  /// The endpoint that is not `w` (or `w` itself for a loop).
  int other(int w) const { return w == u ? v : u; }
  bool operator==(const SkeletonEdge&) const = default;
};

/// Undirected graph on q nodes, self-loops allowed, no duplicate edges.
/// The edge order given at construction is preserved and indexes every
/// EdgeCoefficients vector built against this graph.
class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  /// Throws ParseError on out-of-range endpoints or duplicate edges.
  SkeletonGraph(int node_count, std::vector<SkeletonEdge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const SkeletonEdge> edges() const { return edges_; }
  const SkeletonEdge& edge(int j) const { return edges_[j]; }

  bool adjacent(int i, int j) const { return adjacency_[i * node_count_ + j] >= 0; }
  std::optional<int> find_edge(int i, int j) const;
  int loop_count() const;

  /// Edge indices incident to node i, in edge order; a loop appears once.
  std::span<const int> incident(int i) const { return incident_[i]; }

 private:
  int node_count_ = 0;
  std::vector<SkeletonEdge> edges_;
  std::vector<int> adjacency_;  // q*q, edge index or -1
  std::vector<std::vector<int>> incident_;
};

/// Nonnegative integer vector indexed by nodes: x, y, restrictions y_{S'}.
struct NodeAllocation {
  std::vector<std::int64_t> values;

  NodeAllocation() = default;
  explicit NodeAllocation(std::vector<std::int64_t> v);
  static NodeAllocation zeros(std::size_t n) { return NodeAllocation(std::vector<std::int64_t>(n, 0)); }

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }
  std::int64_t& operator[](std::size_t i) { return values[i]; }
  std::int64_t total() const;
  std::int64_t max() const;
  bool operator==(const NodeAllocation&) const = default;
};

struct SkeletonEdges {};
struct CoverEdges {};

/// Nonnegative integer coefficients on the edge list of a particular graph.
/// `Host` distinguishes coefficients on S from coefficients on the
/// bipartite double cover at compile time.
template <class Host>
struct EdgeVector {
  std::vector<std::int64_t> values;

  EdgeVector() = default;
  explicit EdgeVector(std::vector<std::int64_t> v) : values(std::move(v)) {}
  static EdgeVector zeros(std::size_t m) { return EdgeVector(std::vector<std::int64_t>(m, 0)); }

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t j) const { return values[j]; }
  std::int64_t& operator[](std::size_t j) { return values[j]; }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto v : values) s += v;
    return s;
  }
  bool operator==(const EdgeVector&) const = default;
};

using EdgeCoefficients = EdgeVector<SkeletonEdges>;
using CoverCoefficients = EdgeVector<CoverEdges>;

/// Vector with entries in ½ℤ, stored doubled so arithmetic stays exact.
struct HalfIntegerVector {
  std::vector<std::int64_t> twice;

  std::size_t size() const { return twice.size(); }
  bool is_half(std::size_t i) const { return (twice[i] & 1) != 0; }
  bool integral() const;
  std::vector<int> half_integer_indices() const;
  std::int64_t twice_total() const;
  /// Requires integral(); throws InternalContradiction otherwise.
  std::vector<std::int64_t> to_integers() const;
  std::string to_string() const;
};

/// Incidence matrix Z of a skeleton, stored as 2Z with entries in {0,1,2}.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const SkeletonGraph& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 2·Z(i, j).
  int twice(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  /// Z(i, j) as a double, for display only.
  double value(int i, int j) const { return twice(i, j) / 2.0; }

  /// y = Zc, exactly. Throws DimensionError if c does not index S's edges.
  HalfIntegerVector apply(const EdgeCoefficients& c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

IncidenceMatrix build_incidence_matrix(const SkeletonGraph& s);
HalfIntegerVector apply_incidence(const IncidenceMatrix& z, const EdgeCoefficients& c);

/// Complete S-partite graph K_x. Vertices are numbered part by part:
/// part p occupies [offset(p), offset(p) + x_p).
class BlowupGraph {
 public:
  BlowupGraph(SkeletonGraph skeleton, NodeAllocation allocation);

  const SkeletonGraph& skeleton() const { return skeleton_; }
  const NodeAllocation& allocation() const { return allocation_; }
  std::int64_t vertex_count() const { return offsets_.back(); }
  std::int64_t offset(int part) const { return offsets_[part]; }
  std::int64_t part_size(int part) const { return allocation_[part]; }
  /// The projection π.
  int part_of(std::int64_t v) const { return part_of_[v]; }
  bool adjacent(std::int64_t v, std::int64_t w) const;
  std::int64_t edge_count() const;

  /// Calls f(v, w) for every edge with v < w, in lexicographic order.
  template <class F>
  void for_each_edge(F&& f) const {
    const std::int64_t n = vertex_count();
    for (std::int64_t v = 0; v < n; ++v) {
      const int pv = part_of_[v];
      for (std::int64_t w = v + 1; w < n; ++w) {
        if (skeleton_.adjacent(pv, part_of_[w])) f(v, w);
      }
    }
  }

 private:
  SkeletonGraph skeleton_;
  NodeAllocation allocation_;
  std::vector<std::int64_t> offsets_;
  std::vector<int> part_of_;
};

/// Throws DimensionError when x does not have one entry per skeleton node.
BlowupGraph blow_up(const SkeletonGraph& s, const NodeAllocation& x);

}  // namespace kxcover

#pragma once

// Integer solution of   max 1ᵀy  s.t.  y = Zc,  c ≥ 0,  y ≤ x.
//
// Pipeline: bipartite double cover B -> b-matching on B as an integer
// max-flow -> fold back onto S with phi -> remove half-integer nodes by
// alternating updates along even paths of the support graph.

#include <cstdint>
#include <string>
#include <vector>

#include "kxcover/skeleton.hpp"

namespace kxcover {

struct CoverEdge {
  int left = 0;    // u'_left
  int right = 0;   // u''_right
  int origin = 0;  // index of the skeleton edge it comes from
};

/// Bipartite double cover B of a skeleton: left nodes u'_1..u'_q, right
/// nodes u''_1..u''_q. A loop (i,i) yields the single edge (u'_i, u''_i);
/// a non-loop (i,j) yields (u'_i, u''_j) then (u'_j, u''_i).
struct BipartiteDoubleCover {
  int node_count = 0;  // q; B itself has 2q nodes
  int skeleton_edge_count = 0;
  std::vector<CoverEdge> edges;
  NodeAllocation doubled_capacity;  // (x; x)

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Returns (y'; y'') = Ẑd as a single vector of length 2q.
  std::vector<std::int64_t> incidence_apply(const CoverCoefficients& d) const;
};

BipartiteDoubleCover build_double_cover(const SkeletonGraph& s, const NodeAllocation& x);

/// Optimal integer b-matching on B, computed as a max-flow.
CoverCoefficients solve_b_matching(const BipartiteDoubleCover& b);

/// c(i,i) = d(u'_i,u''_i);  c(i,j) = d(u'_i,u''_j) + d(u'_j,u''_i).
EdgeCoefficients phi(const BipartiteDoubleCover& b, const CoverCoefficients& d);

/// d(u'_i,u''_i) = c(i,i);  d(u'_i,u''_j) = c(i,j)/2. Returned doubled.
HalfIntegerVector psi(const BipartiteDoubleCover& b, const EdgeCoefficients& c);

struct EliminationResult {
  EdgeCoefficients c;
  NodeAllocation y;
  int rounds = 0;
};

/// Shortest path in the support graph of c from the lowest-indexed
/// half-integer node to the nearest other half-integer node. Interior nodes
/// are integer nodes. Empty when y is integral.
std::vector<int> find_pairing_path(const SkeletonGraph& s, const EdgeCoefficients& c,
                                   const HalfIntegerVector& y);

/// Adds +1, -1, +1, ... to c along the path's edges, starting at path[0].
void alternate_along_path(const SkeletonGraph& s, EdgeCoefficients& c, const std::vector<int>& path);

/// Turns an optimal integer c with half-integer y = Zc into an optimal c
/// whose y is integral, keeping 1ᵀc. Throws InternalContradiction if an
/// odd pairing path shows c was not optimal.
EliminationResult eliminate_half_integers(const SkeletonGraph& s, const NodeAllocation& x,
                                          EdgeCoefficients c);

struct LpSolution {
  NodeAllocation y;
  EdgeCoefficients c;
  std::int64_t objective = 0;
  int iterations = 0;  // half-integer elimination rounds
};

LpSolution solve_lp(const SkeletonGraph& s, const NodeAllocation& x);

/// Three lines: objective, y, c in edge order.
std::string format_solution(const LpSolution& sol);
LpSolution parse_solution(const std::string& text);

}  // namespace kxcover

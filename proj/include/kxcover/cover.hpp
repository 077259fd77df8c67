#pragma once

// Witness construction: an integer LP solution (y, c) becomes a cycle cover
// of K_y with one cycle per nontrivial component of the support graph S_c.
//
//   S_c component  ->  pseudograph M (c(f) parallel copies of each edge)
//                  ->  Euler circuit of M
//                  ->  Hamilton cycle of K_{y_{S'}} by sending the k-th
//                      visit of node p to the k-th vertex of part p.

#include <cstdint>
#include <string>
#include <vector>

#include "kxcover/lpcore.hpp"
#include "kxcover/skeleton.hpp"

namespace kxcover {

struct SupportGraph {
  std::vector<int> active_edges;             // edges with c > 0, in edge order
  std::vector<int> component_of;             // node -> component id
  std::vector<std::vector<int>> components;  // ascending nodes, ordered by smallest node
  std::vector<int> nontrivial;               // ids of components holding an active edge
};

SupportGraph build_support_graph(const SkeletonGraph& s, const EdgeCoefficients& c);

struct MultiEdge {
  int u = 0;
  int v = 0;
  int origin = 0;  // skeleton edge index

  int other_end(int w) const { return w == u ? v : u; }
};

struct EulerPseudograph {
  std::vector<int> nodes;  // skeleton nodes of the component, ascending
  std::vector<MultiEdge> edges;

  std::int64_t size() const { return static_cast<std::int64_t>(edges.size()); }
  /// Degree in M, loops counted twice.
  std::int64_t degree(int node) const;
};

EulerPseudograph build_pseudograph(const SkeletonGraph& s, const SupportGraph& support,
                                   int component, const EdgeCoefficients& c);

/// nodes[0] e[0] nodes[1] ... e[L-1] nodes[L], with nodes[L] == nodes[0].
struct EulerCircuit {
  std::vector<int> nodes;
  std::vector<int> edges;  // indices into EulerPseudograph::edges

  std::int64_t length() const { return static_cast<std::int64_t>(edges.size()); }
};

/// Hierholzer's algorithm. Throws PreconditionError on odd degree or a
/// disconnected pseudograph.
EulerCircuit euler_circuit(const EulerPseudograph& m);

/// Circuit positions grouped by the skeleton node they visit, and the
/// resulting position -> vertex map τ.
struct PartAssignment {
  std::vector<std::vector<std::int64_t>> index_sets;  // per skeleton node
  std::vector<std::int64_t> tau;                      // position -> vertex of K
};

PartAssignment assign_parts(const EulerCircuit& circuit, const BlowupGraph& k);

/// Hamilton cycle of K_{y_{S'}} (embedded in k) as a vertex sequence, the
/// closing edge implicit. `y_component` is indexed by all q skeleton nodes
/// and is zero outside the component.
std::vector<std::int64_t> lift_to_hamilton(const EulerCircuit& circuit,
                                           const NodeAllocation& y_component,
                                           const BlowupGraph& k);

struct CycleCover {
  std::vector<std::vector<std::int64_t>> cycles;

  std::int64_t covered() const;
  std::size_t count() const { return cycles.size(); }
};

/// Cycle cover of K_y ⊆ K_x with at most q cycles. Requires x_i ≥ 3.
CycleCover build_cycle_cover(const SkeletonGraph& s, const NodeAllocation& x, const LpSolution& sol);

/// One line per cycle: 0-based vertex indices of K_x in traversal order.
std::string format_cover(const CycleCover& cover);
CycleCover parse_cover(const std::string& text);

}  // namespace kxcover

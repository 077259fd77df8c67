#include "kxcover/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "kxcover/errors.hpp"

namespace kxcover {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SupportGraph build_support_graph(const SkeletonGraph& s, const EdgeCoefficients& c) {
  if (c.size() != static_cast<std::size_t>(s.edge_count())) {
    throw DimensionError(fmt::format("coefficient vector has {} entries, skeleton has {} edges",
                                     c.size(), s.edge_count()));
  }
  const int q = s.node_count();
  SupportGraph g;
  DisjointSets sets(q);
  for (int j = 0; j < s.edge_count(); ++j) {
    if (c[j] < 0) throw PreconditionError("coefficients must be nonnegative");
    if (c[j] == 0) continue;
    g.active_edges.push_back(j);
    sets.unite(s.edge(j).u, s.edge(j).v);
  }
  // Roots are the smallest node of each set, so ascending roots give
  // components ordered by their smallest node.
  std::vector<int> id_of_root(q, -1);
  g.component_of.assign(q, -1);
  for (int v = 0; v < q; ++v) {
    const int r = sets.find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(g.components.size());
      g.components.emplace_back();
    }
    g.component_of[v] = id_of_root[r];
    g.components[id_of_root[r]].push_back(v);
  }
  std::vector<char> has_edge(g.components.size(), 0);
  for (int j : g.active_edges) has_edge[g.component_of[s.edge(j).u]] = 1;
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    if (has_edge[k]) g.nontrivial.push_back(static_cast<int>(k));
  }
  return g;
}

std::int64_t EulerPseudograph::degree(int node) const {
  std::int64_t d = 0;
  for (const auto& e : edges) d += (e.u == node) + (e.v == node);
  return d;
}

EulerPseudograph build_pseudograph(const SkeletonGraph& s, const SupportGraph& support,
                                   int component, const EdgeCoefficients& c) {
  EulerPseudograph m;
  m.nodes = support.components.at(component);
  std::vector<std::int64_t> degree(s.node_count(), 0);
  for (int j : support.active_edges) {
    const auto& e = s.edge(j);
    if (support.component_of[e.u] != component) continue;
    for (std::int64_t k = 0; k < c[j]; ++k) m.edges.push_back({e.u, e.v, j});
    degree[e.u] += c[j];
    degree[e.v] += c[j];
  }
  for (int v : m.nodes) {
    if (degree[v] == 0) {
      throw InternalContradiction(
          fmt::format("node {} has degree 0 inside support component {}", v + 1, component));
    }
  }
  return m;
}

EulerCircuit euler_circuit(const EulerPseudograph& m) {
  EulerCircuit circuit;
  if (m.edges.empty()) return circuit;
  const int q = m.nodes.empty() ? 0 : *std::max_element(m.nodes.begin(), m.nodes.end()) + 1;
  std::vector<std::vector<int>> incident(q);
  std::vector<std::int64_t> degree(q, 0);
  for (int k = 0; k < static_cast<int>(m.edges.size()); ++k) {
    const auto& e = m.edges[k];
    if (e.u >= q || e.v >= q) throw PreconditionError("pseudograph edge leaves its node set");
    incident[e.u].push_back(k);
    if (e.u != e.v) incident[e.v].push_back(k);
    degree[e.u] += 1;
    degree[e.v] += 1;
  }
  for (int v : m.nodes) {
    if (degree[v] % 2 != 0) {
      throw PreconditionError(fmt::format("node {} has odd degree {}", v + 1, degree[v]));
    }
  }

  int start = -1;
  for (int v : m.nodes) {
    if (degree[v] > 0) {
      start = v;
      break;
    }
  }
  std::vector<char> used(m.edges.size(), 0);
  std::vector<std::size_t> next(q, 0);
  // Stack of (node, edge used to arrive); sub-circuits are spliced as the
  // stack unwinds.
  std::vector<std::pair<int, int>> stack{{start, -1}};
  std::vector<std::pair<int, int>> reversed;
  reversed.reserve(m.edges.size() + 1);
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& i = next[v];
    while (i < incident[v].size() && used[incident[v][i]]) ++i;
    if (i == incident[v].size()) {
      reversed.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const int k = incident[v][i];
    used[k] = 1;
    stack.emplace_back(m.edges[k].other_end(v), k);
  }
  if (reversed.size() != m.edges.size() + 1) {
    throw PreconditionError("pseudograph is disconnected");
  }
  std::reverse(reversed.begin(), reversed.end());
  for (std::size_t t = 0; t < reversed.size(); ++t) {
    circuit.nodes.push_back(reversed[t].first);
    if (t > 0) circuit.edges.push_back(reversed[t].second);
  }
  return circuit;
}

PartAssignment assign_parts(const EulerCircuit& circuit, const BlowupGraph& k) {
  const int q = k.skeleton().node_count();
  PartAssignment a;
  a.index_sets.resize(q);
  const std::int64_t length = circuit.length();
  a.tau.resize(length);
  for (std::int64_t j = 0; j < length; ++j) {
    const int p = circuit.nodes[j];
    const auto rank = static_cast<std::int64_t>(a.index_sets[p].size());
    if (rank >= k.part_size(p)) {
      throw InternalContradiction(
          fmt::format("circuit visits node {} more than its part size {}", p + 1, k.part_size(p)));
    }
    a.index_sets[p].push_back(j);
    a.tau[j] = k.offset(p) + rank;
  }
  return a;
}

std::vector<std::int64_t> lift_to_hamilton(const EulerCircuit& circuit,
                                           const NodeAllocation& y_component,
                                           const BlowupGraph& k) {
  const std::int64_t length = circuit.length();
  if (y_component.total() < 3 || length < 3) {
    throw PreconditionError(fmt::format(
        "component order {} is below 3; no Hamilton cycle exists", y_component.total()));
  }
  if (length != y_component.total()) {
    throw InternalContradiction(fmt::format("circuit length {} differs from component order {}",
                                            length, y_component.total()));
  }
  const auto a = assign_parts(circuit, k);
  for (std::size_t p = 0; p < a.index_sets.size(); ++p) {
    if (static_cast<std::int64_t>(a.index_sets[p].size()) != y_component[p]) {
      throw InternalContradiction(fmt::format("node {} is visited {} times but y = {}", p + 1,
                                              a.index_sets[p].size(), y_component[p]));
    }
  }
  // τ is injective, so with L ≥ 3 consecutive positions (including the
  // wrap L-1 -> 0) always map to distinct vertices.
  return a.tau;
}

std::int64_t CycleCover::covered() const {
  std::int64_t n = 0;
  for (const auto& c : cycles) n += static_cast<std::int64_t>(c.size());
  return n;
}

CycleCover build_cycle_cover(const SkeletonGraph& s, const NodeAllocation& x, const LpSolution& sol) {
  const int q = s.node_count();
  if (x.size() != static_cast<std::size_t>(q) || sol.y.size() != x.size()) {
    throw DimensionError("allocation, solution and skeleton sizes disagree");
  }
  for (int i = 0; i < q; ++i) {
    if (x[i] < 3) {
      throw PreconditionError(
          fmt::format("x_{} = {} but a cycle cover is only guaranteed when every x_i >= 3", i + 1, x[i]));
    }
  }
  const auto y = IncidenceMatrix(s).apply(sol.c);
  if (!y.integral() || y.to_integers() != sol.y.values) {
    throw InternalContradiction("solution y does not equal Zc");
  }
  const BlowupGraph k(s, x);
  const auto support = build_support_graph(s, sol.c);
  CycleCover cover;
  for (int comp : support.nontrivial) {
    NodeAllocation y_comp = NodeAllocation::zeros(q);
    for (int v : support.components[comp]) y_comp[v] = sol.y[v];
    if (y_comp.total() < 3) {
      throw InternalContradiction(fmt::format(
          "support component of order {} < 3: the solution is not optimal", y_comp.total()));
    }
    const auto m = build_pseudograph(s, support, comp, sol.c);
    const auto circuit = euler_circuit(m);
    cover.cycles.push_back(lift_to_hamilton(circuit, y_comp, k));
  }
  return cover;
}

std::string format_cover(const CycleCover& cover) {
  std::string out;
  for (const auto& c : cover.cycles) out += fmt::format("{}\n", fmt::join(c, " "));
  return out;
}

CycleCover parse_cover(const std::string& text) {
  CycleCover cover;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<std::int64_t> cycle;
    std::int64_t v;
    while (ls >> v) cycle.push_back(v);
    if (!ls.eof()) throw ParseError(fmt::format("cover line {}: non-integer token", lineno));
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

}  // namespace kxcover

#include "kxcover/lpcore.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "kxcover/errors.hpp"
#include "kxcover/maxflow.hpp"

namespace kxcover {

std::vector<std::int64_t> BipartiteDoubleCover::incidence_apply(const CoverCoefficients& d) const {
  if (d.size() != edges.size()) {
    throw DimensionError(fmt::format("b-matching has {} entries, double cover has {} edges",
                                     d.size(), edges.size()));
  }
  std::vector<std::int64_t> out(2 * static_cast<std::size_t>(node_count), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out[edges[k].left] += d[k];
    out[node_count + edges[k].right] += d[k];
  }
  return out;
}

BipartiteDoubleCover build_double_cover(const SkeletonGraph& s, const NodeAllocation& x) {
  const int q = s.node_count();
  if (x.size() != static_cast<std::size_t>(q)) {
    throw DimensionError(fmt::format("allocation has {} entries, skeleton has {} nodes", x.size(), q));
  }
  BipartiteDoubleCover b;
  b.node_count = q;
  b.skeleton_edge_count = s.edge_count();
  for (int j = 0; j < s.edge_count(); ++j) {
    const auto& e = s.edge(j);
    b.edges.push_back({e.u, e.v, j});
    if (!e.is_loop()) b.edges.push_back({e.v, e.u, j});
  }
  std::vector<std::int64_t> cap(x.values);
  cap.insert(cap.end(), x.values.begin(), x.values.end());
  b.doubled_capacity = NodeAllocation(std::move(cap));
  return b;
}

CoverCoefficients solve_b_matching(const BipartiteDoubleCover& b) {
  const int q = b.node_count;
  const int source = 2 * q;
  const int sink = 2 * q + 1;
  MaxFlow net(2 * q + 2);
  for (int i = 0; i < q; ++i) {
    net.add_edge(source, i, b.doubled_capacity[i]);
    net.add_edge(q + i, sink, b.doubled_capacity[q + i]);
  }
  std::vector<int> handles;
  handles.reserve(b.edges.size());
  for (const auto& e : b.edges) {
    const std::int64_t cap = std::min(b.doubled_capacity[e.left], b.doubled_capacity[q + e.right]);
    handles.push_back(net.add_edge(e.left, q + e.right, cap));
  }
  net.run(source, sink);
  CoverCoefficients d = CoverCoefficients::zeros(b.edges.size());
  for (std::size_t k = 0; k < handles.size(); ++k) d[k] = net.flow(handles[k]);
  return d;
}

EdgeCoefficients phi(const BipartiteDoubleCover& b, const CoverCoefficients& d) {
  if (d.size() != b.edges.size()) {
    throw DimensionError(fmt::format("b-matching has {} entries, double cover has {} edges",
                                     d.size(), b.edges.size()));
  }
  EdgeCoefficients c = EdgeCoefficients::zeros(b.skeleton_edge_count);
  for (std::size_t k = 0; k < b.edges.size(); ++k) c[b.edges[k].origin] += d[k];
  return c;
}

HalfIntegerVector psi(const BipartiteDoubleCover& b, const EdgeCoefficients& c) {
  if (c.size() != static_cast<std::size_t>(b.skeleton_edge_count)) {
    throw DimensionError(fmt::format("coefficient vector has {} entries, skeleton has {} edges",
                                     c.size(), b.skeleton_edge_count));
  }
  HalfIntegerVector d{std::vector<std::int64_t>(b.edges.size(), 0)};
  for (std::size_t k = 0; k < b.edges.size(); ++k) {
    const auto& e = b.edges[k];
    d.twice[k] = e.left == e.right ? 2 * c[e.origin] : c[e.origin];
  }
  return d;
}

std::vector<int> find_pairing_path(const SkeletonGraph& s, const EdgeCoefficients& c,
                                   const HalfIntegerVector& y) {
  const auto half = y.half_integer_indices();
  if (half.empty()) return {};
  const int q = s.node_count();
  const int start = half.front();

  std::vector<int> parent(q, -1);
  std::vector<char> seen(q, 0);
  std::queue<int> frontier;
  seen[start] = 1;
  frontier.push(start);
  std::vector<int> neighbours;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    neighbours.clear();
    for (int j : s.incident(v)) {
      const auto& e = s.edge(j);
      if (!e.is_loop() && c[j] > 0) neighbours.push_back(e.other(v));
    }
    std::sort(neighbours.begin(), neighbours.end());
    for (int w : neighbours) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (y.is_half(w)) {
        std::vector<int> path{w};
        for (int u = v; u != -1; u = parent[u]) path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
      }
      frontier.push(w);
    }
  }
  throw InternalContradiction(
      fmt::format("half-integer node {} has no half-integer partner in its support component",
                  start + 1));
}

void alternate_along_path(const SkeletonGraph& s, EdgeCoefficients& c, const std::vector<int>& path) {
  for (std::size_t l = 0; l + 1 < path.size(); ++l) {
    const auto j = s.find_edge(path[l], path[l + 1]);
    if (!j) throw InternalContradiction("pairing path uses a non-edge");
    c[*j] += (l % 2 == 0) ? 1 : -1;
    if (c[*j] < 0) throw InternalContradiction("alternating update made a coefficient negative");
  }
}

EliminationResult eliminate_half_integers(const SkeletonGraph& s, const NodeAllocation& x,
                                          EdgeCoefficients c) {
  if (x.size() != static_cast<std::size_t>(s.node_count())) {
    throw DimensionError(fmt::format("allocation has {} entries, skeleton has {} nodes",
                                     x.size(), s.node_count()));
  }
  const IncidenceMatrix z(s);
  int rounds = 0;
  HalfIntegerVector y = z.apply(c);
  const std::int64_t objective = c.total();
  for (;;) {
    const auto path = find_pairing_path(s, c, y);
    if (path.empty()) break;
    const std::size_t length = path.size() - 1;
    if (length % 2 == 1) {
      throw InternalContradiction(fmt::format(
          "odd pairing path of length {} between nodes {} and {}: coefficients are not optimal",
          length, path.front() + 1, path.back() + 1));
    }
    alternate_along_path(s, c, path);
    y = z.apply(c);
    ++rounds;
    if (rounds > s.node_count() / 2) {
      throw InternalContradiction("half-integer elimination exceeded floor(q/2) rounds");
    }
  }
  auto values = y.to_integers();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > x[i]) throw InternalContradiction(fmt::format("y exceeds x at node {}", i + 1));
  }
  if (c.total() != objective) throw InternalContradiction("elimination changed 1ᵀc");
  return {std::move(c), NodeAllocation(std::move(values)), rounds};
}

LpSolution solve_lp(const SkeletonGraph& s, const NodeAllocation& x) {
  const auto b = build_double_cover(s, x);
  const auto d = solve_b_matching(b);
  auto elim = eliminate_half_integers(s, x, phi(b, d));
  LpSolution sol;
  sol.objective = elim.y.total();
  sol.y = std::move(elim.y);
  sol.c = std::move(elim.c);
  sol.iterations = elim.rounds;
  return sol;
}

std::string format_solution(const LpSolution& sol) {
  return fmt::format("{}\n{}\n{}\n", sol.objective, fmt::join(sol.y.values, " "),
                     fmt::join(sol.c.values, " "));
}

namespace {

std::vector<std::int64_t> parse_line(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParseError(fmt::format("non-integer token in {} line", what));
  return out;
}

}  // namespace

LpSolution parse_solution(const std::string& text) {
  std::istringstream in(text);
  std::string l1, l2, l3;
  if (!std::getline(in, l1)) throw ParseError("solution record is empty");
  std::getline(in, l2);
  std::getline(in, l3);
  const auto obj = parse_line(l1, "objective");
  if (obj.size() != 1) throw ParseError("objective line must hold one integer");
  LpSolution sol;
  sol.objective = obj[0];
  // Entries are not range-checked here so a verifier can report bad records.
  sol.y.values = parse_line(l2, "y");
  sol.c.values = parse_line(l3, "c");
  return sol;
}

}  // namespace kxcover

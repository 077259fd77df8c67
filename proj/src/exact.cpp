#include "kxcover/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <fmt/format.h>

#include "kxcover/errors.hpp"
#include "kxcover/matching.hpp"

namespace kxcover {

GeneralGraph::GeneralGraph(int vertex_count, std::vector<Edge> edges, std::vector<int> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count_ < 0) throw ParseError("negative vertex count");
  if (labels_.empty()) {
    labels_.resize(vertex_count_);
    std::iota(labels_.begin(), labels_.end(), 0);
  } else if (static_cast<int>(labels_.size()) != vertex_count_) {
    throw DimensionError("label list does not match vertex count");
  }
  incident_.resize(vertex_count_);
  std::vector<Edge> sorted;
  sorted.reserve(edges_.size());
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw ParseError(fmt::format("edge ({}, {}) has an endpoint outside 0..{}", u, v, vertex_count_ - 1));
    }
    if (u == v) throw ParseError(fmt::format("self-loop at vertex {}", u));
    sorted.emplace_back(std::min(u, v), std::max(u, v));
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ParseError(fmt::format("duplicate edge ({}, {})", dup->first, dup->second));
  }
}

GeneralGraph GeneralGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> index(vertex_count_, -1);
  std::vector<int> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<int>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : edges_) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return GeneralGraph(static_cast<int>(keep.size()), std::move(edges), std::move(labels));
}

GeneralGraph prune_low_degree(const GeneralGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < 2) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v)) {
      const int w = g.other(e, v);
      if (removed[w]) continue;
      if (--degree[w] < 2) {
        removed[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  if (static_cast<int>(keep.size()) == n) return g;
  return g.induced(keep);
}

std::vector<GeneralGraph> components(const GeneralGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (int e : g.incident(v)) {
        const int w = g.other(e, v);
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<GeneralGraph> out;
  out.reserve(members.size());
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    out.push_back(g.induced(m));
  }
  return out;
}

namespace {

// Does the subgraph induced on `subset` have a spanning 2-regular subgraph?
class TwoFactorProbe {
 public:
  TwoFactorProbe(const GeneralGraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
  }

  bool closed_under_degree(std::uint32_t subset) const {
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adj_[v] & subset) < 2) return false;
    }
    return true;
  }

  bool has_two_factor(std::uint32_t subset) {
    subset_ = subset;
    degree_.assign(n_, 0);
    chosen_.assign(n_, 0);
    return extend();
  }

 private:
  // Neighbours of v still able to take an edge to v.
  std::uint32_t options(int v) const {
    std::uint32_t open = 0;
    for (std::uint32_t rest = adj_[v] & subset_ & ~chosen_[v]; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (degree_[w] < 2) open |= 1u << w;
    }
    return open;
  }

  void link(int v, int w, int delta) {
    degree_[v] += delta;
    degree_[w] += delta;
    chosen_[v] ^= 1u << w;
    chosen_[w] ^= 1u << v;
  }

  bool extend() {
    int v = -1;
    for (std::uint32_t rest = subset_; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (degree_[u] >= 2) continue;
      if (degree_[u] + std::popcount(options(u)) < 2) return false;
      if (v < 0) v = u;
    }
    if (v < 0) return true;
    const std::uint32_t open = options(v);
    if (degree_[v] == 1) {
      for (std::uint32_t rest = open; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        link(v, w, 1);
        if (extend()) return true;
        link(v, w, -1);
      }
      return false;
    }
    for (std::uint32_t a = open; a; a &= a - 1) {
      const int w1 = std::countr_zero(a);
      for (std::uint32_t b = a & (a - 1); b; b &= b - 1) {
        const int w2 = std::countr_zero(b);
        link(v, w1, 1);
        link(v, w2, 1);
        if (degree_[w1] <= 2 && degree_[w2] <= 2 && extend()) return true;
        link(v, w2, -1);
        link(v, w1, -1);
      }
    }
    return false;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t subset_ = 0;
  std::vector<int> degree_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

int brute_force_n(const GeneralGraph& g) {
  const int n = g.vertex_count();
  if (n > kBruteForceCap) {
    throw PreconditionError(
        fmt::format("brute force is capped at {} vertices, graph has {}", kBruteForceCap, n));
  }
  TwoFactorProbe probe(g);
  for (int size = n; size >= 3; --size) {
    // Gosper's hack over all subsets of this size.
    std::uint32_t subset = (1u << size) - 1;
    const std::uint32_t limit = 1u << n;
    while (subset < limit) {
      if (probe.closed_under_degree(subset) && probe.has_two_factor(subset)) return size;
      const std::uint32_t low = subset & (~subset + 1);
      const std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return 0;
}

namespace {

// Branch-and-bound over vertex states {free, selected, excluded} and edge
// states {open, in, out}. A selected vertex ends with exactly two `in`
// edges; an excluded one with none. Any edge set meeting these degree
// constraints is a disjoint union of cycles, so nothing else is enforced.
//
// Bound: a 2-regular subgraph on t vertices orients into a directed cycle
// cover, i.e. a matching of size t in the bipartite double cover of the
// residual graph. The matching is repaired incrementally as edges close.
class TwoRegularSearch {
 public:
  TwoRegularSearch(const GeneralGraph& g, std::int64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget),
        vstate_(n_, kFree), estate_(g.edge_count(), kOpen),
        in_deg_(n_, 0), live_deg_(n_, 0),
        mate_out_(n_, -1), mate_in_(n_, -1), stamp_(n_, 0) {
    for (int v = 0; v < n_; ++v) live_deg_[v] = g_.degree(v);
  }

  ExactResult run() {
    for (int v = 0; v < n_; ++v) queue_.push_back(v);
    if (propagate()) {
      augment();
      root_bound_ = matched_;
      search(0, /*fresh=*/false);
    }
    ExactResult r;
    r.value = std::max(best_, 0);
    r.nodes = nodes_;
    for (int e : best_edges_) r.witness.push_back(g_.edges()[e]);
    return r;
  }

 private:
  enum : std::uint8_t { kFree, kSelected, kExcluded };
  enum : std::uint8_t { kOpen, kIn, kOut };

  struct Change {
    bool is_edge;
    int index;
    std::uint8_t old_state;
  };

  struct Snapshot {
    std::vector<int> out, in;
    int matched = 0;
  };

  void set_vertex(int v, std::uint8_t state) {
    trail_.push_back({false, v, vstate_[v]});
    vstate_[v] = state;
    if (state == kSelected) ++selected_;
    queue_.push_back(v);
  }

  void set_edge(int e, std::uint8_t state) {
    trail_.push_back({true, e, estate_[e]});
    estate_[e] = state;
    const auto [a, b] = g_.edges()[e];
    if (state == kIn) {
      ++in_deg_[a];
      ++in_deg_[b];
    } else {
      --live_deg_[a];
      --live_deg_[b];
      unmatch(a, b);
      unmatch(b, a);
    }
    queue_.push_back(a);
    queue_.push_back(b);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Change c = trail_.back();
      trail_.pop_back();
      if (!c.is_edge) {
        if (vstate_[c.index] == kSelected) --selected_;
        vstate_[c.index] = c.old_state;
        continue;
      }
      const auto [a, b] = g_.edges()[c.index];
      if (estate_[c.index] == kIn) {
        --in_deg_[a];
        --in_deg_[b];
      } else {
        ++live_deg_[a];
        ++live_deg_[b];
      }
      estate_[c.index] = c.old_state;
    }
    queue_.clear();
  }

  void unmatch(int from, int to) {
    if (mate_out_[from] == to) {
      mate_out_[from] = -1;
      mate_in_[to] = -1;
      --matched_;
    }
  }

  bool check(int v) {
    if (vstate_[v] == kExcluded) {
      for (int e : g_.incident(v)) {
        if (estate_[e] == kIn) return false;
        if (estate_[e] == kOpen) set_edge(e, kOut);
      }
      return true;
    }
    if (in_deg_[v] > 2) return false;
    if (live_deg_[v] < 2) {
      if (in_deg_[v] > 0 || vstate_[v] == kSelected) return false;
      set_vertex(v, kExcluded);
      return true;
    }
    if (in_deg_[v] > 0 && vstate_[v] == kFree) set_vertex(v, kSelected);
    if (vstate_[v] != kSelected || in_deg_[v] == live_deg_[v]) return true;
    if (in_deg_[v] == 2) {
      for (int e : g_.incident(v)) {
        if (estate_[e] == kOpen) set_edge(e, kOut);
      }
    } else if (live_deg_[v] == 2) {
      for (int e : g_.incident(v)) {
        if (estate_[e] == kOpen) set_edge(e, kIn);
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int v = queue_.back();
      queue_.pop_back();
      if (!check(v)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  bool kuhn(int v) {
    for (int e : g_.incident(v)) {
      if (estate_[e] == kOut) continue;
      const int w = g_.other(e, v);
      if (stamp_[w] == stamp_id_) continue;
      stamp_[w] = stamp_id_;
      if (mate_in_[w] < 0 || kuhn(mate_in_[w])) {
        mate_out_[v] = w;
        mate_in_[w] = v;
        return true;
      }
    }
    return false;
  }

  void augment() {
    for (int v = 0; v < n_; ++v) {
      if (vstate_[v] == kExcluded || mate_out_[v] >= 0) continue;
      ++stamp_id_;
      if (kuhn(v)) ++matched_;
    }
  }

  void save(Snapshot& s) const {
    s.out = mate_out_;
    s.in = mate_in_;
    s.matched = matched_;
  }

  void restore(const Snapshot& s) {
    mate_out_ = s.out;
    mate_in_ = s.in;
    matched_ = s.matched;
  }

  // The matching is a directed cycle cover of the residual graph. Its cycles
  // of length >= 3 form a 2-regular subgraph of G regardless of branch state.
  void harvest() {
    int found = 0;
    ++stamp_id_;
    for (int v = 0; v < n_; ++v) {
      if (stamp_[v] == stamp_id_ || mate_out_[v] < 0) continue;
      int len = 0;
      int w = v;
      while (w >= 0 && stamp_[w] != stamp_id_) {
        stamp_[w] = stamp_id_;
        ++len;
        w = mate_out_[w];
      }
      if (w == v && len >= 3) found += len;
    }
    if (found <= best_) return;
    best_ = found;
    best_edges_.clear();
    ++stamp_id_;
    for (int v = 0; v < n_; ++v) {
      if (stamp_[v] == stamp_id_ || mate_out_[v] < 0) continue;
      std::vector<int> cycle;
      int w = v;
      while (w >= 0 && stamp_[w] != stamp_id_) {
        stamp_[w] = stamp_id_;
        cycle.push_back(w);
        w = mate_out_[w];
      }
      if (w != v || cycle.size() < 3) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        best_edges_.push_back(edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
      }
    }
  }

  int edge_between(int a, int b) const {
    for (int e : g_.incident(a)) {
      if (g_.other(e, a) == b) return e;
    }
    throw InternalContradiction("matched pair is not an edge");
  }

  int pick_edge(int v) const {
    int fallback = -1;
    for (int e : g_.incident(v)) {
      if (estate_[e] != kOpen) continue;
      const int w = g_.other(e, v);
      if (mate_out_[v] == w || mate_in_[v] == w) return e;
      if (fallback < 0) fallback = e;
    }
    return fallback;
  }

  void search(std::size_t depth, bool fresh) {
    if (fresh) {
      ++nodes_;
      if (budget_ > 0 && nodes_ > budget_) {
        throw BudgetExceeded(fmt::format("branch-and-bound exceeded {} nodes", budget_),
                             std::max(best_, 0), root_bound_);
      }
      if (!propagate()) return;
      augment();
    }
    if (matched_ <= best_) return;
    harvest();
    if (matched_ <= best_) return;

    int deficient = -1;
    int fewest = 0;
    int branch_vertex = -1;
    for (int v = 0; v < n_; ++v) {
      if (vstate_[v] == kSelected && in_deg_[v] < 2) {
        const int open = live_deg_[v] - in_deg_[v];
        if (deficient < 0 || open < fewest) {
          deficient = v;
          fewest = open;
        }
      } else if (vstate_[v] == kFree &&
                 (branch_vertex < 0 || live_deg_[v] > live_deg_[branch_vertex])) {
        branch_vertex = v;
      }
    }

    if (deficient < 0 && branch_vertex < 0) {
      if (selected_ > best_) {
        best_ = selected_;
        best_edges_.clear();
        for (int e = 0; e < g_.edge_count(); ++e) {
          if (estate_[e] == kIn) best_edges_.push_back(e);
        }
      }
      return;
    }

    if (snapshots_.size() <= depth) snapshots_.resize(depth + 1);
    save(snapshots_[depth]);
    const std::size_t mark = trail_.size();

    if (deficient >= 0) {
      const int e = pick_edge(deficient);
      set_edge(e, kIn);
      search(depth + 1, true);
      undo(mark);
      restore(snapshots_[depth]);
      if (matched_ <= best_) return;
      set_edge(e, kOut);
      search(depth + 1, true);
    } else {
      set_vertex(branch_vertex, kSelected);
      search(depth + 1, true);
      undo(mark);
      restore(snapshots_[depth]);
      if (matched_ <= best_) return;
      set_vertex(branch_vertex, kExcluded);
      search(depth + 1, true);
    }
    undo(mark);
    restore(snapshots_[depth]);
  }

  const GeneralGraph& g_;
  int n_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::uint8_t> vstate_;
  std::vector<std::uint8_t> estate_;
  std::vector<int> in_deg_;
  std::vector<int> live_deg_;
  int selected_ = 0;
  std::vector<Change> trail_;
  std::vector<int> queue_;

  std::vector<int> mate_out_;
  std::vector<int> mate_in_;
  int matched_ = 0;
  std::vector<int> stamp_;
  int stamp_id_ = 0;
  std::vector<Snapshot> snapshots_;

  int best_ = -1;
  int root_bound_ = 0;
  std::vector<int> best_edges_;
};

}  // namespace

ExactResult matching_component(const GeneralGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  auto port = [&](int e, int side) { return 2 * n + 2 * e + side; };
  std::vector<WeightedEdge> edges;
  edges.reserve(n + 5 * m);
  for (int v = 0; v < n; ++v) edges.push_back({2 * v, 2 * v + 1, 0});
  for (int e = 0; e < m; ++e) {
    const auto [a, b] = g.edges()[e];
    edges.push_back({port(e, 0), port(e, 1), 1});
    for (int copy = 0; copy < 2; ++copy) {
      edges.push_back({2 * a + copy, port(e, 0), 1});
      edges.push_back({2 * b + copy, port(e, 1), 1});
    }
  }
  const auto mate = max_weight_matching(2 * n + 2 * m, edges, true);
  ExactResult r;
  std::vector<int> degree(n, 0);
  for (int e = 0; e < m; ++e) {
    const int at = mate[port(e, 0)];
    if (at < 0) throw InternalContradiction("gadget matching is not perfect");
    if (at == port(e, 1)) continue;
    const auto [a, b] = g.edges()[e];
    ++degree[a];
    ++degree[b];
    r.witness.push_back(g.edges()[e]);
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 2) {
      ++r.value;
    } else if (degree[v] != 0) {
      throw InternalContradiction(fmt::format("gadget matching gives vertex {} degree {}", v, degree[v]));
    }
  }
  return r;
}

ExactResult solve_component(const GeneralGraph& g, const ExactOptions& options) {
  if (options.engine == ExactEngine::kMatching) return matching_component(g);
  return TwoRegularSearch(g, options.node_budget).run();
}

ExactResult exact_n(const GeneralGraph& g, const ExactOptions& options) {
  const GeneralGraph base(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  const auto parts = components(prune_low_degree(base));
  ExactResult total;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& comp = parts[k];
    if (comp.vertex_count() < 3) continue;
    ExactOptions local = options;
    if (options.node_budget > 0) {
      local.node_budget = std::max<std::int64_t>(1, options.node_budget - total.nodes);
    }
    ExactResult r;
    try {
      r = solve_component(comp, local);
    } catch (const BudgetExceeded& ex) {
      std::int64_t bound = total.value + ex.upper_bound();
      for (std::size_t rest = k + 1; rest < parts.size(); ++rest) bound += parts[rest].vertex_count();
      throw BudgetExceeded(ex.what(), total.value + ex.best_found(), bound);
    }
    total.value += r.value;
    total.nodes += r.nodes;
    for (const auto& [u, v] : r.witness) total.witness.emplace_back(comp.label(u), comp.label(v));
  }
  std::sort(total.witness.begin(), total.witness.end());
  return total;
}

}  // namespace kxcover

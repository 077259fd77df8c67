#include "kxcover/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

namespace kxcover {

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += fmt::format("{} {}", c.passed ? "PASS" : "FAIL", c.name);
    if (!c.detail.empty()) out += fmt::format(": {}", c.detail);
    out += '\n';
  }
  out += fmt::format("overall {}\n", overall() ? "PASS" : "FAIL");
  return out;
}

namespace {

struct LpSearch {
  const SkeletonGraph& s;
  std::int64_t cap;
  std::vector<std::int64_t> slack;       // 2x - 2y, per node
  std::vector<std::uint32_t> suffix_nodes;  // nodes touched by edges j..m-1
  std::int64_t best = 0;

  void run(int j, std::int64_t current) {
    if (current > best) best = current;
    if (j == s.edge_count()) return;
    std::int64_t reachable = 0;
    for (int i = 0; i < s.node_count(); ++i) {
      if (suffix_nodes[j] >> i & 1u) reachable += slack[i];
    }
    if (current + reachable / 2 <= best) return;
    const auto& e = s.edge(j);
    const std::int64_t most =
        std::min(cap, e.is_loop() ? slack[e.u] / 2 : std::min(slack[e.u], slack[e.v]));
    for (std::int64_t units = most; units >= 0; --units) {
      slack[e.u] -= units;
      slack[e.v] -= units;
      run(j + 1, current + units);
      slack[e.u] += units;
      slack[e.v] += units;
    }
  }
};

}  // namespace

std::int64_t brute_force_lp_optimum(const SkeletonGraph& s, const NodeAllocation& x,
                                    std::int64_t max_coefficient) {
  LpSearch search{s, max_coefficient, {}, {}, 0};
  for (auto v : x.values) search.slack.push_back(2 * v);
  search.suffix_nodes.assign(s.edge_count() + 1, 0);
  for (int j = s.edge_count() - 1; j >= 0; --j) {
    search.suffix_nodes[j] = search.suffix_nodes[j + 1] | (1u << s.edge(j).u) | (1u << s.edge(j).v);
  }
  search.run(0, 0);
  return search.best;
}

VerificationReport verify_lp_solution(const SkeletonGraph& s, const NodeAllocation& x,
                                      const LpSolution& sol) {
  VerificationReport r;
  const auto q = static_cast<std::size_t>(s.node_count());
  const auto m = static_cast<std::size_t>(s.edge_count());
  const bool dims = sol.y.size() == q && sol.c.size() == m && x.size() == q;
  r.add("dimensions", dims,
        fmt::format("|y|={} |c|={} |x|={} for q={} m={}", sol.y.size(), sol.c.size(), x.size(), q, m));
  if (!dims) return r;

  const bool nonneg = std::all_of(sol.c.values.begin(), sol.c.values.end(), [](auto v) { return v >= 0; });
  r.add("c_nonnegative", nonneg);

  std::vector<std::int64_t> twice_y(q, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& e = s.edge(static_cast<int>(j));
    twice_y[e.u] += sol.c[j];
    twice_y[e.v] += sol.c[j];
  }
  const bool integral = std::all_of(twice_y.begin(), twice_y.end(), [](auto t) { return t % 2 == 0; });
  r.add("y_integral", integral);
  bool equal = integral;
  for (std::size_t i = 0; i < q && equal; ++i) equal = twice_y[i] == 2 * sol.y[i];
  r.add("y_equals_Zc", equal);

  std::string over;
  for (std::size_t i = 0; i < q; ++i) {
    if (sol.y[i] > x[i]) over += fmt::format(" y_{}={}>x_{}={}", i + 1, sol.y[i], i + 1, x[i]);
  }
  r.add("y_le_x", over.empty(), over);

  const auto sum_c = sol.c.total();
  const auto sum_y = sol.y.total();
  r.add("objective_consistent", sum_c == sum_y && sum_y == sol.objective,
        fmt::format("1'c={} 1'y={} objective={}", sum_c, sum_y, sol.objective));

  if (q <= 4 && x.max() <= 4) {
    const auto best = brute_force_lp_optimum(s, x);
    r.add("optimal", best == sol.objective, fmt::format("brute force optimum {}", best));
  }
  return r;
}

VerificationReport verify_cycle_cover(const BlowupGraph& k, const CycleCover& cover,
                                      std::optional<std::int64_t> expected_order) {
  VerificationReport r;
  const auto& s = k.skeleton();
  const auto& x = k.allocation();
  std::vector<std::int64_t> starts{0};
  for (auto v : x.values) starts.push_back(starts.back() + v);
  const std::int64_t n = starts.back();
  auto part = [&](std::int64_t v) {
    return static_cast<int>(std::upper_bound(starts.begin(), starts.end(), v) - starts.begin()) - 1;
  };
  std::set<std::pair<int, int>> allowed;
  for (const auto& e : s.edges()) {
    allowed.emplace(e.u, e.v);
    allowed.emplace(e.v, e.u);
  }

  bool in_range = true, long_enough = true, simple = true, disjoint = true, edges_ok = true;
  std::string first_bad_edge;
  std::map<std::int64_t, std::size_t> owner;
  for (std::size_t c = 0; c < cover.cycles.size(); ++c) {
    const auto& cyc = cover.cycles[c];
    if (cyc.size() < 3) long_enough = false;
    std::set<std::int64_t> seen;
    for (auto v : cyc) {
      if (v < 0 || v >= n) in_range = false;
      if (!seen.insert(v).second) simple = false;
      const auto [it, fresh] = owner.emplace(v, c);
      if (!fresh && it->second != c) disjoint = false;
    }
    if (!in_range) continue;
    for (std::size_t i = 0; i < cyc.size() && cyc.size() >= 2; ++i) {
      const auto a = cyc[i];
      const auto b = cyc[(i + 1) % cyc.size()];
      if (a == b || !allowed.count({part(a), part(b)})) {
        if (edges_ok) first_bad_edge = fmt::format("({}, {}) in cycle {}", a, b, c);
        edges_ok = false;
      }
    }
  }
  r.covered = static_cast<std::int64_t>(owner.size());
  r.add("vertices_in_range", in_range);
  r.add("cycle_length_at_least_3", long_enough);
  r.add("cycles_simple", simple);
  r.add("cycles_disjoint", disjoint);
  r.add("edges_in_host", edges_ok, first_bad_edge);
  r.add("cycle_count_at_most_q", cover.cycles.size() <= static_cast<std::size_t>(s.node_count()),
        fmt::format("{} cycles, q = {}", cover.cycles.size(), s.node_count()));
  if (expected_order) {
    r.add("covered_equals_expected", r.covered == *expected_order,
          fmt::format("covered {}, expected {}", r.covered, *expected_order));
  }
  return r;
}

VerificationReport verify_2_regular_subgraph(const GeneralGraph& g, const std::vector<Edge>& edges) {
  VerificationReport r;
  std::set<Edge> host;
  for (const auto& [u, v] : g.edges()) host.emplace(std::min(u, v), std::max(u, v));
  std::set<Edge> picked;
  bool subset = true, distinct = true;
  std::map<int, int> degree;
  for (const auto& [u, v] : edges) {
    const Edge key{std::min(u, v), std::max(u, v)};
    if (!host.count(key)) subset = false;
    if (!picked.insert(key).second) distinct = false;
    ++degree[u];
    ++degree[v];
  }
  std::string bad;
  for (const auto& [v, d] : degree) {
    if (d != 2 && bad.empty()) bad = fmt::format("vertex {} has degree {}", v, d);
  }
  r.covered = static_cast<std::int64_t>(degree.size());
  r.add("edges_in_graph", subset);
  r.add("edges_distinct", distinct);
  r.add("degree_two", bad.empty(), bad);
  return r;
}

}  // namespace kxcover

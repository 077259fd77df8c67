#include "kxcover/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace kxcover {

MaxFlow::MaxFlow(int node_count) : adj_(node_count), level_(node_count), next_(node_count) {}

int MaxFlow::add_edge(int a, int b, std::int64_t cap) {
  adj_[a].push_back({b, static_cast<int>(adj_[b].size()), cap, cap});
  adj_[b].push_back({a, static_cast<int>(adj_[a].size()) - 1, 0, 0});
  handles_.emplace_back(a, static_cast<int>(adj_[a].size()) - 1);
  return static_cast<int>(handles_.size()) - 1;
}

std::int64_t MaxFlow::flow(int handle) const {
  const auto [v, k] = handles_[handle];
  const Arc& arc = adj_[v][k];
  return arc.original - arc.cap;
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const Arc& a : adj_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
    Arc& a = adj_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      adj_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (std::int64_t f = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

}  // namespace kxcover

#pragma once

// Reference computations used only by tests. They share no code with the
// library solvers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kxcover/matching.hpp"
#include "kxcover/skeleton.hpp"

namespace oracle {

// max 1ᵀc over integer c ≥ 0 with Σ_j 2Z(i,j) c_j ≤ cap_i for every node,
// tabulated for all capacity vectors in {0..max_cap}^q by dynamic
// programming over the edges. Query with cap = 2x.
class LpTable {
 public:
  LpTable(int q, std::vector<std::pair<int, int>> edges, int max_cap)
      : q_(q), base_(max_cap + 1), edges_(std::move(edges)) {
    states_ = 1;
    for (int i = 0; i < q_; ++i) states_ *= base_;
    std::vector<int> next(states_, 0), cur(states_);
    for (int j = static_cast<int>(edges_.size()) - 1; j >= 0; --j) {
      const auto [a, b] = edges_[j];
      for (int s = 0; s < states_; ++s) {
        auto cap = decode(s);
        int best = 0;
        for (int c = 0;; ++c) {
          auto rest = cap;
          if (a == b) {
            rest[a] -= 2 * c;
          } else {
            rest[a] -= c;
            rest[b] -= c;
          }
          if (std::any_of(rest.begin(), rest.end(), [](int v) { return v < 0; })) break;
          best = std::max(best, c + next[encode(rest)]);
        }
        cur[s] = best;
      }
      std::swap(cur, next);
    }
    table_ = std::move(next);
  }

  int optimum(const std::vector<std::int64_t>& x) const {
    std::vector<int> cap;
    for (auto v : x) cap.push_back(static_cast<int>(2 * v));
    return table_[encode(cap)];
  }

 private:
  std::vector<int> decode(int s) const {
    std::vector<int> cap(q_);
    for (int i = 0; i < q_; ++i) {
      cap[i] = s % base_;
      s /= base_;
    }
    return cap;
  }
  int encode(const std::vector<int>& cap) const {
    int s = 0;
    for (int i = q_ - 1; i >= 0; --i) s = s * base_ + cap[i];
    return s;
  }

  int q_;
  int base_;
  int states_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> table_;
};

// Exhaustive maximum-weight matching; with max_cardinality, the best weight
// among matchings of maximum size. Returns {size, weight}.
inline std::pair<int, std::int64_t> brute_matching(int n, const std::vector<kxcover::WeightedEdge>& edges,
                                                   bool max_cardinality) {
  std::pair<int, std::int64_t> best{0, 0};
  std::vector<char> used(n, 0);
  auto better = [&](std::pair<int, std::int64_t> a, std::pair<int, std::int64_t> b) {
    if (max_cardinality && a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  auto rec = [&](auto&& self, std::size_t k, int size, std::int64_t weight) -> void {
    if (better({size, weight}, best)) best = {size, weight};
    for (std::size_t e = k; e < edges.size(); ++e) {
      const auto& ed = edges[e];
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = 1;
      self(self, e + 1, size + 1, weight + ed.weight);
      used[ed.u] = used[ed.v] = 0;
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

// Random skeleton on q nodes: each of the q(q+1)/2 possible edges (loops
// included) independently with probability p.
inline kxcover::SkeletonGraph random_skeleton(std::mt19937_64& rng, int q, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<kxcover::SkeletonEdge> edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i; j < q; ++j) {
      if (keep(rng)) edges.push_back({i, j});
    }
  }
  return kxcover::SkeletonGraph(q, std::move(edges));
}

// Determinant of a small integer matrix by fraction-free elimination.
inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> a) {
  const int n = static_cast<int>(a.size());
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace oracle

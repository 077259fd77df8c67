#include "kxcover/matching.hpp"

#include <algorithm>
#include <functional>

#include "kxcover/errors.hpp"

namespace kxcover {

namespace {

// Endpoint p of edge k is 2k (the u side) or 2k + 1 (the v side); p ^ 1 is
// the opposite endpoint. Vertices are 0..n-1, blossoms n..2n-1.
class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n), m_(static_cast<int>(edges.size())), max_card_(max_cardinality) {
    std::int64_t max_weight = 0;
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
        throw InternalContradiction("matching edge out of range or a loop");
      }
      u_.push_back(e.u);
      v_.push_back(e.v);
      w_.push_back(e.weight);
      max_weight = std::max(max_weight, e.weight);
    }
    endpoint_.resize(2 * m_);
    for (int k = 0; k < m_; ++k) {
      endpoint_[2 * k] = u_[k];
      endpoint_[2 * k + 1] = v_[k];
    }
    neighbend_.assign(n_, {});
    for (int k = 0; k < m_; ++k) {
      neighbend_[u_[k]].push_back(2 * k + 1);
      neighbend_[v_[k]].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    parent_.assign(2 * n_, -1);
    childs_.assign(2 * n_, {});
    endps_.assign(2 * n_, {});
    base_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) base_[v] = v;
    bestedge_.assign(2 * n_, -1);
    best_list_.assign(2 * n_, {});
    has_best_list_.assign(2 * n_, 0);
    for (int b = 2 * n_ - 1; b >= n_; --b) unused_.push_back(b);
    dual_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dual_[v] = max_weight;
    allow_.assign(m_, 0);
    greedy_start(max_weight);
  }

  std::vector<int> run() {
    for (int stage = 0; stage < n_; ++stage) {
      if (!stage_step()) break;
    }
    std::vector<int> out(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
    }
    return out;
  }

 private:
  std::int64_t slack(int k) const { return dual_[u_[k]] + dual_[v_[k]] - 2 * w_[k]; }

  // Edges of full weight are tight under the initial duals, so matching
  // them greedily keeps complementary slackness.
  void greedy_start(std::int64_t max_weight) {
    for (int k = 0; k < m_; ++k) {
      if (w_[k] != max_weight) continue;
      if (mate_[u_[k]] >= 0 || mate_[v_[k]] >= 0) continue;
      mate_[u_[k]] = 2 * k + 1;
      mate_[v_[k]] = 2 * k;
    }
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : childs_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else {
      const int base = base_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = base_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = u_[k], w = v_[k];
    const int bb = inblossom_[base];
    int bv = inblossom_[v], bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    base_[b] = base;
    parent_[b] = -1;
    parent_[bb] = b;
    auto& path = childs_[b];
    auto& endps = endps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      parent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      parent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    for (int x : leaves(b)) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }

    std::vector<int> best_to(2 * n_, -1);
    auto consider = [&](int e) {
      int i = u_[e], j = v_[e];
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 && (best_to[bj] == -1 || slack(e) < slack(best_to[bj]))) {
        best_to[bj] = e;
      }
    };
    for (int child : path) {
      if (!has_best_list_[child]) {
        for (int x : leaves(child)) {
          for (int p : neighbend_[x]) consider(p / 2);
        }
      } else {
        for (int e : best_list_[child]) consider(e);
      }
      best_list_[child].clear();
      has_best_list_[child] = 0;
      bestedge_[child] = -1;
    }
    auto& list = best_list_[b];
    list.clear();
    for (int e : best_to) {
      if (e != -1) list.push_back(e);
    }
    has_best_list_[b] = 1;
    bestedge_[b] = -1;
    for (int e : list) {
      if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : childs_[b]) {
      parent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dual_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int x : leaves(s)) inblossom_[x] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& ch = childs_[b];
      const auto& ep = endps_[b];
      const int len = static_cast<int>(ch.size());
      const int entry = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entry) - ch.begin());
      int jstep, trick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        trick = 0;
      } else {
        jstep = -1;
        trick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[ep[wrap(j - trick, len)] ^ trick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allow_[ep[wrap(j - trick, len)] / 2] = 1;
        j += jstep;
        p = ep[wrap(j - trick, len)] ^ trick;
        allow_[p / 2] = 1;
        j += jstep;
      }
      int bv = ch[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (ch[wrap(j, len)] != entry) {
        bv = ch[wrap(j, len)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int labelled = -1;
        for (int x : leaves(bv)) {
          if (label_[x] != 0) {
            labelled = x;
            break;
          }
        }
        if (labelled >= 0) {
          label_[labelled] = 0;
          label_[endpoint_[mate_[base_[bv]]]] = 0;
          assign_label(labelled, 2, labelend_[labelled]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    base_[b] = -1;
    best_list_[b].clear();
    has_best_list_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (parent_[t] != b) t = parent_[t];
    if (t >= n_) augment_blossom(t, v);
    auto& ch = childs_[b];
    auto& ep = endps_[b];
    const int len = static_cast<int>(ch.size());
    const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, trick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      trick = 0;
    } else {
      jstep = -1;
      trick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = ch[wrap(j, len)];
      const int p = ep[wrap(j - trick, len)] ^ trick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = ch[wrap(j, len)];
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    base_[b] = base_[ch[0]];
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{u_[k], 2 * k + 1}, {v_[k], 2 * k}};
    for (const auto& sp : ends) {
      int s = sp[0], p = sp[1];
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  // One stage: grow alternating trees until an augmenting path is found or
  // the duals certify optimality. Returns false when no augmentation happened.
  bool stage_step() {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      best_list_[b].clear();
      has_best_list_[b] = 0;
    }
    std::fill(allow_.begin(), allow_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }

    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allow_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allow_[k] = 1;
          }
          if (allow_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int type = -1;
      std::int64_t delta = 0;
      int delta_edge = -1, delta_blossom = -1;
      if (!max_card_) {
        type = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const auto d = slack(bestedge_[v]);
          if (type == -1 || d < delta) {
            delta = d;
            type = 2;
            delta_edge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const auto d = slack(bestedge_[b]) / 2;
          if (type == -1 || d < delta) {
            delta = d;
            type = 3;
            delta_edge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && (type == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          type = 4;
          delta_blossom = b;
        }
      }
      if (type == -1) {
        type = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
      }

      for (int v = 0; v < n_; ++v) {
        const int l = label_[inblossom_[v]];
        if (l == 1) {
          dual_[v] -= delta;
        } else if (l == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }

      if (type == 1) break;
      if (type == 2) {
        allow_[delta_edge] = 1;
        int i = u_[delta_edge], j = v_[delta_edge];
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (type == 3) {
        allow_[delta_edge] = 1;
        queue_.push_back(u_[delta_edge]);
      } else {
        expand_blossom(delta_blossom, false);
      }
    }
    if (!augmented) return false;
    for (int b = n_; b < 2 * n_; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
        expand_blossom(b, true);
      }
    }
    return true;
  }

  int n_, m_;
  bool max_card_;
  std::vector<int> u_, v_;
  std::vector<std::int64_t> w_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_, labelend_, inblossom_, parent_;
  std::vector<std::vector<int>> childs_, endps_;
  std::vector<int> base_, bestedge_;
  std::vector<std::vector<int>> best_list_;
  std::vector<char> has_best_list_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allow_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
  if (vertex_count == 0) return {};
  return Blossom(vertex_count, edges, max_cardinality).run();
}

}  // namespace kxcover

#include "kxcover/skeleton.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "kxcover/errors.hpp"

namespace kxcover {

SkeletonGraph::SkeletonGraph(int node_count, std::vector<SkeletonEdge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) throw ParseError("skeleton must have at least one node");
  adjacency_.assign(static_cast<std::size_t>(node_count_) * node_count_, -1);
  incident_.resize(node_count_);
  for (int j = 0; j < edge_count(); ++j) {
    const auto& e = edges_[j];
    if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
      throw ParseError(fmt::format("edge {} has an endpoint outside 1..{}", j + 1, node_count_));
    }
    if (adjacency_[e.u * node_count_ + e.v] >= 0) {
      throw ParseError(fmt::format("duplicate edge ({}, {})", e.u + 1, e.v + 1));
    }
    adjacency_[e.u * node_count_ + e.v] = j;
    adjacency_[e.v * node_count_ + e.u] = j;
    incident_[e.u].push_back(j);
    if (!e.is_loop()) incident_[e.v].push_back(j);
  }
}

std::optional<int> SkeletonGraph::find_edge(int i, int j) const {
  const int k = adjacency_[i * node_count_ + j];
  if (k < 0) return std::nullopt;
  return k;
}

int SkeletonGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const SkeletonEdge& e) { return e.is_loop(); }));
}

NodeAllocation::NodeAllocation(std::vector<std::int64_t> v) : values(std::move(v)) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw ParseError(fmt::format("allocation entry {} is negative", i + 1));
  }
}

std::int64_t NodeAllocation::total() const {
  std::int64_t s = 0;
  for (auto v : values) s += v;
  return s;
}

std::int64_t NodeAllocation::max() const {
  std::int64_t m = 0;
  for (auto v : values) m = std::max(m, v);
  return m;
}

bool HalfIntegerVector::integral() const {
  return std::none_of(twice.begin(), twice.end(), [](std::int64_t t) { return (t & 1) != 0; });
}

std::vector<int> HalfIntegerVector::half_integer_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < twice.size(); ++i) {
    if (is_half(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::int64_t HalfIntegerVector::twice_total() const {
  std::int64_t s = 0;
  for (auto t : twice) s += t;
  return s;
}

std::vector<std::int64_t> HalfIntegerVector::to_integers() const {
  if (!integral()) throw InternalContradiction("vector has half-integer entries");
  std::vector<std::int64_t> out(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) out[i] = twice[i] / 2;
  return out;
}

std::string HalfIntegerVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < twice.size(); ++i) {
    if (i) s += ' ';
    s += is_half(i) ? fmt::format("{}/2", twice[i]) : fmt::format("{}", twice[i] / 2);
  }
  return s;
}

IncidenceMatrix::IncidenceMatrix(const SkeletonGraph& s)
    : rows_(s.node_count()), cols_(s.edge_count()),
      entries_(static_cast<std::size_t>(rows_) * cols_, 0) {
  for (int j = 0; j < cols_; ++j) {
    const auto& e = s.edge(j);
    entries_[static_cast<std::size_t>(e.u) * cols_ + j] += 1;
    entries_[static_cast<std::size_t>(e.v) * cols_ + j] += 1;
  }
}

HalfIntegerVector IncidenceMatrix::apply(const EdgeCoefficients& c) const {
  if (c.size() != static_cast<std::size_t>(cols_)) {
    throw DimensionError(fmt::format("coefficient vector has {} entries, skeleton has {} edges",
                                     c.size(), cols_));
  }
  HalfIntegerVector y{std::vector<std::int64_t>(rows_, 0)};
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) y.twice[i] += twice(i, j) * c[j];
  }
  return y;
}

IncidenceMatrix build_incidence_matrix(const SkeletonGraph& s) { return IncidenceMatrix(s); }

HalfIntegerVector apply_incidence(const IncidenceMatrix& z, const EdgeCoefficients& c) {
  return z.apply(c);
}

BlowupGraph::BlowupGraph(SkeletonGraph skeleton, NodeAllocation allocation)
    : skeleton_(std::move(skeleton)), allocation_(std::move(allocation)) {
  if (allocation_.size() != static_cast<std::size_t>(skeleton_.node_count())) {
    throw DimensionError(fmt::format("allocation has {} entries, skeleton has {} nodes",
                                     allocation_.size(), skeleton_.node_count()));
  }
  offsets_.assign(allocation_.size() + 1, 0);
  for (std::size_t p = 0; p < allocation_.size(); ++p) {
    offsets_[p + 1] = offsets_[p] + allocation_[p];
  }
  part_of_.reserve(offsets_.back());
  for (std::size_t p = 0; p < allocation_.size(); ++p) {
    part_of_.insert(part_of_.end(), allocation_[p], static_cast<int>(p));
  }
}

bool BlowupGraph::adjacent(std::int64_t v, std::int64_t w) const {
  if (v == w) return false;
  return skeleton_.adjacent(part_of_[v], part_of_[w]);
}

std::int64_t BlowupGraph::edge_count() const {
  std::int64_t m = 0;
  for (const auto& e : skeleton_.edges()) {
    const std::int64_t a = allocation_[e.u];
    m += e.is_loop() ? a * (a - 1) / 2 : a * allocation_[e.v];
  }
  return m;
}

BlowupGraph blow_up(const SkeletonGraph& s, const NodeAllocation& x) { return BlowupGraph(s, x); }

}  // namespace kxcover

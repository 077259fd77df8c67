#include "kxcover/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "kxcover/errors.hpp"

namespace kxcover {

namespace {

class Tokens {
 public:
  Tokens(const std::string& text, const char* what) : in_(text), what_(what) {}

  std::int64_t next(const char* field) {
    std::string tok;
    if (!(in_ >> tok)) throw ParseError(fmt::format("{}: missing {}", what_, field));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw ParseError(fmt::format("{}: '{}' is not an integer ({})", what_, tok, field));
    }
    return v;
  }

  void expect_end() {
    std::string tok;
    if (in_ >> tok) throw ParseError(fmt::format("{}: unexpected trailing token '{}'", what_, tok));
  }

  bool done() {
    in_ >> std::ws;
    return in_.eof();
  }

 private:
  std::istringstream in_;
  const char* what_;
};

}  // namespace

SkeletonGraph parse_skeleton(const std::string& text) {
  Tokens t(text, "skeleton");
  const auto q = t.next("q");
  const auto m = t.next("m");
  if (q < 1) throw ParseError("skeleton: q must be positive");
  if (m < 0) throw ParseError("skeleton: m must be nonnegative");
  std::vector<SkeletonEdge> edges;
  for (std::int64_t j = 0; j < m; ++j) {
    const auto i = t.next("edge endpoint");
    const auto k = t.next("edge endpoint");
    if (i < 1 || k > q || i > k) {
      throw ParseError(fmt::format("skeleton: edge {} is '{} {}', need 1 <= i <= j <= {}", j + 1, i, k, q));
    }
    edges.push_back({static_cast<int>(i - 1), static_cast<int>(k - 1)});
  }
  t.expect_end();
  return SkeletonGraph(static_cast<int>(q), std::move(edges));
}

std::string format_skeleton(const SkeletonGraph& s) {
  std::string out = fmt::format("{} {}\n", s.node_count(), s.edge_count());
  for (const auto& e : s.edges()) {
    out += fmt::format("{} {}\n", std::min(e.u, e.v) + 1, std::max(e.u, e.v) + 1);
  }
  return out;
}

NodeAllocation parse_allocation(const std::string& text) {
  Tokens t(text, "allocation");
  std::vector<std::int64_t> values;
  while (!t.done()) {
    const auto v = t.next("entry");
    if (v < 0) throw ParseError(fmt::format("allocation: entry {} is negative", values.size() + 1));
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("allocation: no entries");
  return NodeAllocation(std::move(values));
}

std::string format_allocation(const NodeAllocation& x) {
  return fmt::format("{}\n", fmt::join(x.values, " "));
}

GeneralGraph parse_graph(const std::string& text) {
  Tokens t(text, "graph");
  const auto n = t.next("n");
  const auto m = t.next("m");
  if (n < 0 || m < 0) throw ParseError("graph: n and m must be nonnegative");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::int64_t e = 0; e < m; ++e) {
    const auto u = t.next("edge endpoint");
    const auto v = t.next("edge endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  t.expect_end();
  return GeneralGraph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const GeneralGraph& g) {
  std::string out = fmt::format("{} {}\n", g.vertex_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(fmt::format("cannot write '{}'", path));
  out << contents;
  if (!out) throw ParseError(fmt::format("failed writing '{}'", path));
}

}  // namespace kxcover

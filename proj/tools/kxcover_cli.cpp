// kxcover: command-line front end.
//
// Exit codes: 0 success, 1 verification failed, 2 input error,
// 3 precondition violation, 4 budget exhausted, 5 internal invariant breach.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kxcover/cover.hpp"
#include "kxcover/errors.hpp"
#include "kxcover/exact.hpp"
#include "kxcover/io.hpp"
#include "kxcover/lpcore.hpp"
#include "kxcover/simulate.hpp"
#include "kxcover/verify.hpp"

namespace {

using namespace kxcover;

struct Options {
  std::string skeleton;
  std::string alloc;
  std::string graph;
  std::string out;
  std::string cover;
  std::string solution;
  std::string witness;
  std::uint64_t seed = 0;
  std::int64_t samples = 1000;
  std::vector<std::string> p{"0.6"};
  std::vector<int> scales{1};
  int threads = 0;
  bool allow_long = false;
  std::string format = "csv";
  std::int64_t budget = ExactOptions{}.node_budget;
  std::optional<std::int64_t> expected;
  std::string engine = "matching";
};

ExactOptions exact_options(const Options& o) {
  ExactOptions opt;
  opt.node_budget = o.budget;
  opt.engine = o.engine == "bnb" ? ExactEngine::kBranchAndBound : ExactEngine::kMatching;
  return opt;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

char separator(const Options& o) { return o.format == "txt" ? ' ' : ','; }

int cmd_solve(const Options& o) {
  const auto s = parse_skeleton(read_file(o.skeleton));
  const auto x = parse_allocation(read_file(o.alloc));
  emit(o, format_solution(solve_lp(s, x)));
  return 0;
}

int cmd_cover(const Options& o) {
  const auto s = parse_skeleton(read_file(o.skeleton));
  const auto x = parse_allocation(read_file(o.alloc));
  const auto sol = solve_lp(s, x);
  const auto cover = build_cycle_cover(s, x, sol);
  const std::string summary = fmt::format("covered {}, cycles {}\n", cover.covered(), cover.count());
  if (o.out.empty()) {
    std::cout << format_cover(cover);
    std::cerr << summary;
  } else {
    write_file(o.out, format_cover(cover));
    std::cout << summary;
  }
  return 0;
}

int cmd_verify(const Options& o) {
  VerificationReport report;
  if (!o.graph.empty()) {
    if (o.witness.empty()) throw ParseError("verify --graph needs --witness");
    const auto g = parse_graph(read_file(o.graph));
    const auto w = parse_graph(read_file(o.witness));
    report = verify_2_regular_subgraph(g, {w.edges().begin(), w.edges().end()});
    if (o.expected) {
      report.add("covered_equals_expected", report.covered == *o.expected,
                 fmt::format("covered {}, expected {}", report.covered, *o.expected));
    }
  } else {
    if (o.skeleton.empty() || o.alloc.empty()) throw ParseError("verify needs --skeleton and --alloc");
    const auto s = parse_skeleton(read_file(o.skeleton));
    const auto x = parse_allocation(read_file(o.alloc));
    if (!o.solution.empty()) {
      report = verify_lp_solution(s, x, parse_solution(read_file(o.solution)));
    } else if (!o.cover.empty()) {
      const auto expected = o.expected ? *o.expected : solve_lp(s, x).objective;
      report = verify_cycle_cover(blow_up(s, x), parse_cover(read_file(o.cover)), expected);
    } else {
      throw ParseError("verify needs one of --cover, --solution or --graph");
    }
  }
  std::cout << report.to_string();
  return report.overall() ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  std::cout << brute_force_n(parse_graph(read_file(o.graph))) << '\n';
  return 0;
}

int cmd_exact(const Options& o) {
  const auto g = parse_graph(read_file(o.graph));
  const auto r = exact_n(g, exact_options(o));
  std::cout << r.value << '\n';
  if (!o.out.empty()) write_file(o.out, format_graph(GeneralGraph(g.vertex_count(), r.witness)));
  return 0;
}

SimConfig base_config(const Options& o) {
  SimConfig cfg;
  cfg.skeleton = parse_skeleton(read_file(o.skeleton));
  cfg.allocation = parse_allocation(read_file(o.alloc));
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.allow_long = o.allow_long;
  cfg.exact = exact_options(o);
  return cfg;
}

int cmd_simulate(const Options& o) {
  if (o.out.empty()) throw ParseError("simulate needs --out");
  SimConfig cfg = base_config(o);
  std::vector<Pmf> pmfs;
  std::vector<std::string> labels;
  std::int64_t timeouts = 0;
  for (const auto& text : o.p) {
    cfg.probability = EdgeProbability::parse(text);
    pmfs.push_back(run_experiment(cfg, o.threads));
    labels.push_back(cfg.probability.label());
    timeouts += pmfs.back().timeouts;
  }
  write_file(o.out, format_pmf_table(pmfs, labels, separator(o)));
  write_file(o.out + ".meta", format_pmf_sidecar(pmfs, labels, o.seed));
  for (std::size_t i = 0; i < pmfs.size(); ++i) {
    std::cout << fmt::format("p={} n*={} p_hat_star={:.6f}\n", labels[i], pmfs[i].n_star,
                             pmfs[i].p_hat_star());
  }
  if (timeouts > 0) {
    std::cerr << fmt::format("{} samples exceeded the search budget and were excluded\n", timeouts);
    return 4;
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  if (o.out.empty()) throw ParseError("sweep needs --out");
  SimConfig cfg = base_config(o);
  std::vector<EdgeProbability> rules;
  for (const auto& text : o.p) rules.push_back(EdgeProbability::parse(text));
  const auto rows = scaling_sweep(cfg, o.scales, rules, o.threads);
  write_file(o.out, format_sweep_table(rows, separator(o)));
  std::int64_t timeouts = 0;
  for (const auto& r : rows) timeouts += r.timeouts;
  if (timeouts > 0) {
    std::cerr << fmt::format("{} samples exceeded the search budget and were excluded\n", timeouts);
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest 2-regular subgraphs of complete S-partite graphs"};
  app.require_subcommand(1);
  Options o;

  auto skeleton_opts = [&](CLI::App* sub) {
    sub->add_option("--skeleton", o.skeleton, "Skeleton graph file")->required();
    sub->add_option("--alloc", o.alloc, "Allocation file")->required();
  };
  auto sim_opts = [&](CLI::App* sub) {
    skeleton_opts(sub);
    sub->add_option("--out", o.out, "Output table")->required();
    sub->add_option("--seed", o.seed, "Base seed");
    sub->add_option("--samples", o.samples, "Samples per edge probability")->check(CLI::PositiveNumber);
    sub->add_option("--p", o.p, "Edge probabilities: floats or n^-0.5, n^-0.4, logn/n, 4logn/n, 6logn/n")
        ->delimiter(',');
    sub->add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)");
    sub->add_flag("--allow-long", o.allow_long, "Permit instances above the desk-scale size");
    sub->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "txt"}));
    sub->add_option("--budget", o.budget, "Branch-and-bound node budget per sample (0 = unlimited)");
    sub->add_option("--engine", o.engine, "Exact solver")->check(CLI::IsMember({"matching", "bnb"}));
  };

  auto* solve = app.add_subcommand("solve", "Solve the LP and print objective, y, c");
  skeleton_opts(solve);
  solve->add_option("--out", o.out, "Write the record here instead of stdout");

  auto* cover = app.add_subcommand("cover", "Build a cycle cover of K_y with at most q cycles");
  skeleton_opts(cover);
  cover->add_option("--out", o.out, "Cover file (one cycle per line)");

  auto* verify = app.add_subcommand("verify", "Check a solution record, cover file or 2-regular witness");
  verify->add_option("--skeleton", o.skeleton, "Skeleton graph file");
  verify->add_option("--alloc", o.alloc, "Allocation file");
  verify->add_option("--cover", o.cover, "Cover file to check");
  verify->add_option("--solution", o.solution, "Solution record to check");
  verify->add_option("--graph", o.graph, "Host graph of a 2-regular witness");
  verify->add_option("--witness", o.witness, "Witness edges in graph format");
  verify->add_option("--expected", o.expected, "Expected covered vertex count");

  auto* oracle = app.add_subcommand("oracle", "Brute-force n(G) for graphs up to 20 vertices");
  oracle->add_option("--graph", o.graph, "Graph file")->required();

  auto* exact = app.add_subcommand("exact", "Exact n(G) by pruning, components and branch-and-bound");
  exact->add_option("--graph", o.graph, "Graph file")->required();
  exact->add_option("--out", o.out, "Write the witness edges here");
  exact->add_option("--budget", o.budget, "Branch-and-bound node budget (0 = unlimited)");
  exact->add_option("--engine", o.engine, "Exact solver")->check(CLI::IsMember({"matching", "bnb"}));

  auto* simulate = app.add_subcommand("simulate", "Empirical PMF of n(G) over random subgraphs of K_x");
  sim_opts(simulate);

  auto* sweep = app.add_subcommand("sweep", "p_hat_star over scaled allocations k*x");
  sim_opts(sweep);
  sweep->add_option("--scales", o.scales, "Scale factors k")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*cover) return cmd_cover(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*exact) return cmd_exact(o);
    if (*simulate) return cmd_simulate(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const kxcover::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
  return 2;
}

#pragma once

// Monte-Carlo study of n(G) for random subgraphs of K_x.
//
// Each admissible edge of K_x is kept independently with probability p.
// Sample r uses its own std::mt19937_64 stream seeded from (seed, r)
// through std::seed_seq, and draws one 53-bit uniform per admissible pair
// in lexicographic pair order, so a sample is a pure function of
// (x, S, p, seed, r) regardless of how samples are spread over threads.

#include <cstdint>
#include <string>
#include <vector>

#include "kxcover/exact.hpp"
#include "kxcover/skeleton.hpp"

namespace kxcover {

/// Edge probability: a constant or a rule evaluated at n = ‖x‖₁
/// (natural logarithm).
class EdgeProbability {
 public:
  enum class Kind { Constant, PowerHalf, PowerTwoFifths, LogOverN, FourLogOverN, SixLogOverN };

  static EdgeProbability constant(double p);
  static EdgeProbability rule(Kind kind);
  /// Accepts a float literal or one of: n^-0.5, n^-0.4, logn/n, 4logn/n,
  /// 6logn/n (also log(n)/n spellings). Throws ParseError otherwise.
  static EdgeProbability parse(const std::string& text);

  Kind kind() const { return kind_; }
  /// Throws PreconditionError if the value falls outside [0, 1].
  double evaluate(std::int64_t n) const;
  std::string label() const;

 private:
  Kind kind_ = Kind::Constant;
  double value_ = 0.0;
};

/// Largest n handled without explicitly allowing long runs.
inline constexpr std::int64_t kDeskScaleVertexLimit = 100;

struct SimConfig {
  SkeletonGraph skeleton;
  NodeAllocation allocation;
  EdgeProbability probability;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  bool allow_long = false;
  ExactOptions exact;
};

struct Pmf {
  std::vector<std::int64_t> counts;  // counts[t], t = 0..n*
  std::int64_t n_star = 0;
  std::int64_t samples = 0;   // N requested
  std::int64_t timeouts = 0;  // samples whose exact solve ran out of budget
  std::int64_t max_observed = 0;

  std::int64_t evaluated() const { return samples - timeouts; }
  double probability(std::int64_t t) const;
  double p_hat_star() const { return probability(n_star); }
  bool operator==(const Pmf&) const = default;
};

/// Draws one uniform in [0, 1) per admissible pair of k, in pair order.
GeneralGraph sbm_sample(const BlowupGraph& k, double p, std::uint64_t seed, std::uint64_t sample_index);
GeneralGraph sbm_sample(const SimConfig& cfg, std::uint64_t sample_index);

/// Reference implementation: one sample after another.
Pmf run_experiment_serial(const SimConfig& cfg);
/// Samples spread over an OpenMP team of `threads` (0 = runtime default).
/// Produces the same Pmf as run_experiment_serial.
Pmf run_experiment(const SimConfig& cfg, int threads = 0);

struct SweepRow {
  int scale = 1;
  std::int64_t n = 0;
  std::string p_label;
  std::int64_t n_star = 0;
  double p_hat_star = 0.0;
  std::int64_t timeouts = 0;
};

/// One experiment per (k, rule) on x = k·base.
std::vector<SweepRow> scaling_sweep(const SimConfig& base, const std::vector<int>& scales,
                                    const std::vector<EdgeProbability>& rules, int threads = 0);

/// `t,<label1>,...` then one row per t. `separator` is ',' for csv, ' ' for txt.
std::string format_pmf_table(const std::vector<Pmf>& pmfs, const std::vector<std::string>& labels,
                             char separator = ',');
/// key=value lines: n_star, samples, seed, then one p_hat_star per label.
std::string format_pmf_sidecar(const std::vector<Pmf>& pmfs, const std::vector<std::string>& labels,
                               std::uint64_t seed);
/// `n,p_label,p_hat_star`.
std::string format_sweep_table(const std::vector<SweepRow>& rows, char separator = ',');

}  // namespace kxcover

#include "kxcover/simulate.hpp"

#include <cmath>
#include <exception>
#include <random>

#include <omp.h>

#include <fmt/format.h>

#include "kxcover/errors.hpp"
#include "kxcover/lpcore.hpp"

namespace kxcover {

EdgeProbability EdgeProbability::constant(double p) {
  EdgeProbability e;
  e.kind_ = Kind::Constant;
  e.value_ = p;
  return e;
}

EdgeProbability EdgeProbability::rule(Kind kind) {
  EdgeProbability e;
  e.kind_ = kind;
  return e;
}

EdgeProbability EdgeProbability::parse(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '*') t += ch;
  }
  if (t == "n^-0.5") return rule(Kind::PowerHalf);
  if (t == "n^-0.4") return rule(Kind::PowerTwoFifths);
  if (t == "logn/n") return rule(Kind::LogOverN);
  if (t == "4logn/n") return rule(Kind::FourLogOverN);
  if (t == "6logn/n") return rule(Kind::SixLogOverN);
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw ParseError(fmt::format("unknown edge probability '{}'", text));
  if (!(p >= 0.0 && p <= 1.0)) throw ParseError(fmt::format("edge probability {} outside [0, 1]", p));
  return constant(p);
}

double EdgeProbability::evaluate(std::int64_t n) const {
  const double dn = static_cast<double>(n);
  double p = value_;
  switch (kind_) {
    case Kind::Constant: break;
    case Kind::PowerHalf: p = std::pow(dn, -0.5); break;
    case Kind::PowerTwoFifths: p = std::pow(dn, -0.4); break;
    case Kind::LogOverN: p = std::log(dn) / dn; break;
    case Kind::FourLogOverN: p = 4.0 * std::log(dn) / dn; break;
    case Kind::SixLogOverN: p = 6.0 * std::log(dn) / dn; break;
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError(fmt::format("edge probability {} evaluates to {} at n = {}", label(), p, n));
  }
  return p;
}

std::string EdgeProbability::label() const {
  switch (kind_) {
    case Kind::PowerHalf: return "n^-0.5";
    case Kind::PowerTwoFifths: return "n^-0.4";
    case Kind::LogOverN: return "log(n)/n";
    case Kind::FourLogOverN: return "4log(n)/n";
    case Kind::SixLogOverN: return "6log(n)/n";
    case Kind::Constant: break;
  }
  return fmt::format("{}", value_);
}

double Pmf::probability(std::int64_t t) const {
  if (t < 0 || t >= static_cast<std::int64_t>(counts.size()) || evaluated() == 0) return 0.0;
  return static_cast<double>(counts[t]) / static_cast<double>(evaluated());
}

GeneralGraph sbm_sample(const BlowupGraph& k, double p, std::uint64_t seed, std::uint64_t sample_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample_index),
                    static_cast<std::uint32_t>(sample_index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Edge> edges;
  k.for_each_edge([&](std::int64_t v, std::int64_t w) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
  });
  return GeneralGraph(static_cast<int>(k.vertex_count()), std::move(edges));
}

GeneralGraph sbm_sample(const SimConfig& cfg, std::uint64_t sample_index) {
  const BlowupGraph k(cfg.skeleton, cfg.allocation);
  return sbm_sample(k, cfg.probability.evaluate(k.vertex_count()), cfg.seed, sample_index);
}

namespace {

struct Prepared {
  BlowupGraph k;
  double p;
  std::int64_t n_star;
};

Prepared prepare(const SimConfig& cfg) {
  if (cfg.samples < 1) throw PreconditionError("sample count must be at least 1");
  BlowupGraph k(cfg.skeleton, cfg.allocation);
  if (k.vertex_count() > kDeskScaleVertexLimit && !cfg.allow_long) {
    throw PreconditionError(fmt::format(
        "n = {} exceeds the desk-scale limit {}; pass --allow-long to run it", k.vertex_count(),
        kDeskScaleVertexLimit));
  }
  const double p = cfg.probability.evaluate(k.vertex_count());
  const auto n_star = solve_lp(cfg.skeleton, cfg.allocation).objective;
  return {std::move(k), p, n_star};
}

// n(G) for one sample, or -1 when the exact search ran out of budget.
std::int64_t evaluate_sample(const Prepared& prep, const SimConfig& cfg, std::uint64_t r) {
  const auto g = sbm_sample(prep.k, prep.p, cfg.seed, r);
  try {
    const std::int64_t value = exact_n(g, cfg.exact).value;
    if (value > prep.n_star) {
      throw InternalContradiction(
          fmt::format("sample {} has n(G) = {} above the LP bound {}", r, value, prep.n_star));
    }
    return value;
  } catch (const BudgetExceeded&) {
    return -1;
  }
}

Pmf empty_pmf(const Prepared& prep, const SimConfig& cfg) {
  Pmf pmf;
  pmf.n_star = prep.n_star;
  pmf.samples = cfg.samples;
  pmf.counts.assign(prep.n_star + 1, 0);
  return pmf;
}

void record(Pmf& pmf, std::int64_t value) {
  if (value < 0) {
    ++pmf.timeouts;
    return;
  }
  ++pmf.counts[value];
  pmf.max_observed = std::max(pmf.max_observed, value);
}

}  // namespace

Pmf run_experiment_serial(const SimConfig& cfg) {
  const auto prep = prepare(cfg);
  Pmf pmf = empty_pmf(prep, cfg);
  for (std::int64_t r = 0; r < cfg.samples; ++r) record(pmf, evaluate_sample(prep, cfg, r));
  return pmf;
}

Pmf run_experiment(const SimConfig& cfg, int threads) {
  const auto prep = prepare(cfg);
  Pmf pmf = empty_pmf(prep, cfg);
  std::exception_ptr failure;
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(team)
  {
    Pmf local = empty_pmf(prep, cfg);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < cfg.samples; ++r) {
      try {
        record(local, evaluate_sample(prep, cfg, static_cast<std::uint64_t>(r)));
      } catch (...) {
#pragma omp critical(kxcover_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(kxcover_merge)
    {
      for (std::size_t t = 0; t < pmf.counts.size(); ++t) pmf.counts[t] += local.counts[t];
      pmf.timeouts += local.timeouts;
      pmf.max_observed = std::max(pmf.max_observed, local.max_observed);
    }
  }
  if (failure) std::rethrow_exception(failure);
  return pmf;
}

std::vector<SweepRow> scaling_sweep(const SimConfig& base, const std::vector<int>& scales,
                                    const std::vector<EdgeProbability>& rules, int threads) {
  std::vector<SweepRow> rows;
  for (int k : scales) {
    if (k < 1) throw PreconditionError("scale factors must be positive");
    SimConfig cfg = base;
    for (auto& v : cfg.allocation.values) v *= k;
    for (const auto& rule : rules) {
      cfg.probability = rule;
      const Pmf pmf = run_experiment(cfg, threads);
      rows.push_back({k, cfg.allocation.total(), rule.label(), pmf.n_star, pmf.p_hat_star(), pmf.timeouts});
    }
  }
  return rows;
}

std::string format_pmf_table(const std::vector<Pmf>& pmfs, const std::vector<std::string>& labels,
                             char separator) {
  std::string out = "t";
  for (const auto& l : labels) out += fmt::format("{}{}", separator, l);
  out += '\n';
  std::int64_t rows = 0;
  for (const auto& pmf : pmfs) rows = std::max<std::int64_t>(rows, pmf.counts.size());
  for (std::int64_t t = 0; t < rows; ++t) {
    out += fmt::format("{}", t);
    for (const auto& pmf : pmfs) out += fmt::format("{}{:.6f}", separator, pmf.probability(t));
    out += '\n';
  }
  return out;
}

std::string format_pmf_sidecar(const std::vector<Pmf>& pmfs, const std::vector<std::string>& labels,
                               std::uint64_t seed) {
  std::string out;
  out += fmt::format("n_star={}\n", pmfs.empty() ? 0 : pmfs.front().n_star);
  out += fmt::format("samples={}\n", pmfs.empty() ? 0 : pmfs.front().samples);
  out += fmt::format("seed={}\n", seed);
  for (std::size_t i = 0; i < pmfs.size(); ++i) {
    out += fmt::format("p_hat_star[{}]={:.6f}\n", labels[i], pmfs[i].p_hat_star());
    out += fmt::format("timeouts[{}]={}\n", labels[i], pmfs[i].timeouts);
  }
  return out;
}

std::string format_sweep_table(const std::vector<SweepRow>& rows, char separator) {
  std::string out = fmt::format("n{0}p_label{0}p_hat_star\n", separator);
  for (const auto& r : rows) out += fmt::format("{1}{0}{2}{0}{3:.6f}\n", separator, r.n, r.p_label, r.p_hat_star);
  return out;
}

}  // namespace kxcover

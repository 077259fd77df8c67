#pragma once

// Independent checks of solver output. Nothing here calls into the
// construction code: incidence sums, part boundaries and adjacency are
// recomputed from the raw skeleton and allocation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kxcover/cover.hpp"
#include "kxcover/exact.hpp"
#include "kxcover/lpcore.hpp"
#include "kxcover/skeleton.hpp"

namespace kxcover {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::int64_t covered = 0;

  bool overall() const;
  void add(std::string name, bool passed, std::string detail = {});
  const Check* find(const std::string& name) const;
  std::string to_string() const;
};

/// max 1ᵀc over integer c ∈ {0..max_coefficient}^m with Zc ≤ x, by
/// exhaustive search. Meant for q ≤ 4, x ≤ 4.
std::int64_t brute_force_lp_optimum(const SkeletonGraph& s, const NodeAllocation& x,
                                    std::int64_t max_coefficient = 8);

/// Feasibility, integrality and bookkeeping of an LP record; optimality too
/// when q ≤ 4 and every x_i ≤ 4.
VerificationReport verify_lp_solution(const SkeletonGraph& s, const NodeAllocation& x,
                                      const LpSolution& sol);

VerificationReport verify_cycle_cover(const BlowupGraph& k, const CycleCover& cover,
                                      std::optional<std::int64_t> expected_order);

VerificationReport verify_2_regular_subgraph(const GeneralGraph& g, const std::vector<Edge>& edges);

}  // namespace kxcover

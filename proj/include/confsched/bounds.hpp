#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "confsched/core.hpp"
#include "confsched/graphalgs.hpp"

namespace confsched {

/// SPT value of the conflict-free relaxation Pm || sum C_j.
Time lb_spt(const Instance& inst);

/// Sum of prefix sums of the sorted weights: the jobs of `jobs` run one
/// after another in SPT order from time 0.
Time sequential_spt(const Instance& inst, const std::vector<int>& jobs);

/// Greedy independent set of the agreement graph (a set of pairwise
/// conflicting jobs) scheduled sequentially in SPT order.
Time lb_wis(const Instance& inst, WisRule rule);

struct BoundReport {
  /// LB1 (SPT), LB2 (GWMIN), LB3 (GWMIN2), LB4 (GWMAX).
  std::array<Time, 4> lb{};
  /// LB5..LB7 from an external solver, when ingested (see merge_milp_bound).
  std::array<std::optional<Time>, 3> milp{};
  Time best = 0;
  /// 1-based index of the bound attaining `best`; ties go to the lowest.
  int best_source = 1;
  std::array<double, 4> seconds{};

  std::string best_name() const { return "LB" + std::to_string(best_source); }
};

BoundReport best_bound(const Instance& inst);

/// Folds an external solver's relaxation bound for formulation F1..F3
/// (index 1..3, stored as LB5..LB7) into the report. Fractional solver
/// bounds are rounded up after a 1e-6 tolerance (objectives are integral).
void merge_milp_bound(BoundReport& report, int formulation, double bound);

}  // namespace confsched

#include "confsched/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "confsched/error.hpp"

namespace confsched {

Time lb_spt(const Instance& inst) {
  std::vector<Time> p = inst.proc();
  std::sort(p.begin(), p.end());
  const int n = inst.n();
  const int m = inst.m();
  // The job at ascending position k is followed on its machine by the
  // jobs at k + m, k + 2m, ...; each contributes p once per successor.
  Time total = 0;
  for (int k = 0; k < n; ++k) total += p[k] * ((n - 1 - k) / m + 1);
  return total;
}

Time sequential_spt(const Instance& inst, const std::vector<int>& jobs) {
  std::vector<Time> p;
  p.reserve(jobs.size());
  for (int j : jobs) p.push_back(inst.p(j));
  std::sort(p.begin(), p.end());
  Time clock = 0, total = 0;
  for (Time x : p) {
    clock += x;
    total += clock;
  }
  return total;
}

Time lb_wis(const Instance& inst, WisRule rule) {
  return sequential_spt(inst, greedy_wis(agreement_graph(inst), rule));
}

BoundReport best_bound(const Instance& inst) {
  using clock = std::chrono::steady_clock;
  BoundReport r;
  const WeightedGraph agreement = agreement_graph(inst);
  auto t0 = clock::now();
  r.lb[0] = lb_spt(inst);
  auto t1 = clock::now();
  r.seconds[0] = std::chrono::duration<double>(t1 - t0).count();
  const WisRule rules[] = {WisRule::Gwmin, WisRule::Gwmin2, WisRule::Gwmax};
  for (int i = 0; i < 3; ++i) {
    t0 = clock::now();
    r.lb[i + 1] = sequential_spt(inst, greedy_wis(agreement, rules[i]));
    t1 = clock::now();
    r.seconds[i + 1] = std::chrono::duration<double>(t1 - t0).count();
  }
  r.best = r.lb[0];
  r.best_source = 1;
  for (int i = 1; i < 4; ++i) {
    if (r.lb[i] > r.best) {
      r.best = r.lb[i];
      r.best_source = i + 1;
    }
  }
  return r;
}

void merge_milp_bound(BoundReport& report, int formulation, double bound) {
  if (formulation < 1 || formulation > 3) throw ParameterError("formulation index must be 1, 2 or 3");
  if (!std::isfinite(bound)) throw ParameterError("solver bound must be finite");
  const Time value = std::max<Time>(0, static_cast<Time>(std::ceil(bound - 1e-6)));
  report.milp[formulation - 1] = value;
  // Recompute over all seven so ties still resolve to the lowest index.
  report.best = report.lb[0];
  report.best_source = 1;
  for (int i = 1; i < 4; ++i) {
    if (report.lb[i] > report.best) {
      report.best = report.lb[i];
      report.best_source = i + 1;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (report.milp[i] && *report.milp[i] > report.best) {
      report.best = *report.milp[i];
      report.best_source = i + 5;
    }
  }
}

}  // namespace confsched

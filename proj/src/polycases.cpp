#include "confsched/polycases.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "confsched/error.hpp"
#include "confsched/graphalgs.hpp"

namespace confsched {

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Edgeless: return "edgeless";
    case Structure::Clique: return "clique";
    case Structure::ComplementOfStar: return "complement-of-star";
    case Structure::TwoMachineUnit: return "two-machine-unit";
    case Structure::General: return "general";
  }
  return "?";
}

namespace {

std::size_t pairs(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

bool all_unit(const Instance& inst) {
  return std::all_of(inst.proc().begin(), inst.proc().end(), [](Time p) { return p == 1; });
}

std::vector<JobId> spt_order(const Instance& inst, std::vector<JobId> jobs) {
  std::stable_sort(jobs.begin(), jobs.end(), [&](JobId a, JobId b) { return inst.p(a) < inst.p(b); });
  return jobs;
}

bool is_bipartite(const ConflictGraph& g) {
  std::vector<int> side(g.size(), -1);
  for (int s = 0; s < g.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

SolveResult unit_matching_schedule(const Instance& inst) {
  const int n = inst.n();
  const Matching matching = max_matching(inst.conflicts().complement());
  SolveResult r;
  r.schedule = Schedule(n);
  std::vector<char> matched(n, 0);
  Time t = 0;
  for (auto [a, b] : matching) {
    r.schedule.machine_of[a] = 0;
    r.schedule.start_of[a] = t;
    r.schedule.machine_of[b] = 1;
    r.schedule.start_of[b] = t;
    matched[a] = matched[b] = 1;
    ++t;
  }
  for (int j = 0; j < n; ++j) {
    if (matched[j]) continue;
    r.schedule.machine_of[j] = 0;
    r.schedule.start_of[j] = t++;
  }
  r.value = total_flow_time(inst, r.schedule);
  const Time expected = p2_unit_closed_form(n, static_cast<int>(matching.size()));
  if (r.value != expected) {
    throw std::logic_error("unit two-machine schedule value " + std::to_string(r.value) +
                           " disagrees with closed form " + std::to_string(expected));
  }
  return r;
}

}  // namespace

std::optional<JobId> star_complement_center(const Instance& inst) {
  const int n = inst.n();
  if (n < 3 || inst.conflicts().edge_count() != pairs(n - 1)) return std::nullopt;
  for (int j = 0; j < n; ++j)
    if (inst.conflicts().degree(j) == 0) return j;
  return std::nullopt;
}

Structure detect_structure(const Instance& inst) {
  const std::size_t edges = inst.conflicts().edge_count();
  if (edges == 0) return Structure::Edgeless;
  if (edges == pairs(inst.n())) return Structure::Clique;
  if (inst.m() >= 2 && star_complement_center(inst)) return Structure::ComplementOfStar;
  if (inst.m() == 2 && all_unit(inst)) return Structure::TwoMachineUnit;
  return Structure::General;
}

SolveResult solve_edgeless(const Instance& inst) {
  if (inst.conflicts().edge_count() != 0) throw StructureMismatch("conflict graph is not edgeless");
  const auto order = spt_order(inst, identity_permutation(inst.n()));
  SolveResult r;
  r.schedule = Schedule(inst.n());
  std::vector<Time> clock(inst.m(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const JobId j = order[k];
    const int i = static_cast<int>(k % inst.m());
    r.schedule.machine_of[j] = i;
    r.schedule.start_of[j] = clock[i];
    clock[i] += inst.p(j);
  }
  r.value = total_flow_time(inst, r.schedule);
  return r;
}

SolveResult solve_clique(const Instance& inst) {
  if (inst.conflicts().edge_count() != pairs(inst.n())) throw StructureMismatch("conflict graph is not complete");
  SolveResult r;
  r.schedule = Schedule(inst.n());
  Time t = 0;
  for (JobId j : spt_order(inst, identity_permutation(inst.n()))) {
    r.schedule.start_of[j] = t;
    t += inst.p(j);
  }
  r.value = total_flow_time(inst, r.schedule);
  return r;
}

SolveResult solve_star_complement(const Instance& inst) {
  if (inst.m() < 2) throw StructureMismatch("complement-of-star solver needs at least two machines");
  const auto center = star_complement_center(inst);
  if (!center) throw StructureMismatch("conflict graph is not the complement of a star");
  std::vector<JobId> leaves;
  for (int j = 0; j < inst.n(); ++j)
    if (j != *center) leaves.push_back(j);
  SolveResult r;
  r.schedule = Schedule(inst.n());
  r.schedule.machine_of[*center] = 0;
  Time t = 0;
  for (JobId j : spt_order(inst, leaves)) {
    r.schedule.machine_of[j] = 1;
    r.schedule.start_of[j] = t;
    t += inst.p(j);
  }
  r.value = total_flow_time(inst, r.schedule);
  return r;
}

Time p2_unit_closed_form(int n, int matching_size) {
  const Time M = matching_size;
  return M * (M - n) + static_cast<Time>(n) * (n + 1) / 2;
}

SolveResult solve_p2_unit(const Instance& inst) {
  if (inst.m() != 2) throw StructureMismatch("unit-time matching solver needs exactly two machines");
  if (!all_unit(inst)) throw StructureMismatch("unit-time matching solver needs p_j = 1 for every job");
  return unit_matching_schedule(inst);
}

std::optional<SolveResult> route_exact(const Instance& inst, Structure* detected) {
  const Structure s = detect_structure(inst);
  if (detected) *detected = s;
  switch (s) {
    case Structure::Edgeless: return solve_edgeless(inst);
    case Structure::Clique: return solve_clique(inst);
    case Structure::ComplementOfStar: return solve_star_complement(inst);
    case Structure::TwoMachineUnit: return solve_p2_unit(inst);
    case Structure::General: break;
  }
  if (inst.m() == 3 && all_unit(inst) && is_bipartite(inst.conflicts().complement())) {
    return unit_matching_schedule(inst);
  }
  return std::nullopt;
}

}  // namespace confsched

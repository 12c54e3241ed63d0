#pragma once

// Reference implementations used only by the tests. They are written for
// clarity, not speed, and share no code with the library beyond the data
// types.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "confsched/core.hpp"
#include "confsched/decoders.hpp"
#include "confsched/instgen.hpp"
#include "confsched/rng.hpp"

namespace oracle {

using confsched::ConflictGraph;
using confsched::Decoder;
using confsched::Instance;
using confsched::Schedule;
using confsched::Time;

inline Time makespan(const Instance& inst, const Schedule& s) {
  Time c = 0;
  for (int j = 0; j < inst.n(); ++j) c = std::max(c, s.start_of[j] + inst.p(j));
  return c;
}

inline bool covers(const Instance& inst, const Schedule& s, int j, Time t) {
  return s.start_of[j] <= t && t < s.start_of[j] + inst.p(j);
}

/// Unit-slot sweep: at every integer t each machine runs at most one job and
/// no two conflicting jobs run.
inline bool scan_feasible(const Instance& inst, const Schedule& s) {
  const int n = inst.n();
  if (s.size() != n) return false;
  for (int j = 0; j < n; ++j)
    if (s.start_of[j] < 0 || s.machine_of[j] < 0 || s.machine_of[j] >= inst.m()) return false;
  const Time end = makespan(inst, s);
  for (Time t = 0; t < end; ++t) {
    std::vector<int> running;
    for (int j = 0; j < n; ++j)
      if (covers(inst, s, j, t)) running.push_back(j);
    for (std::size_t a = 0; a < running.size(); ++a)
      for (std::size_t b = a + 1; b < running.size(); ++b) {
        const int u = running[a], v = running[b];
        if (s.machine_of[u] == s.machine_of[v] || inst.conflict(u, v)) return false;
      }
  }
  return true;
}

inline Time flow(const Instance& inst, const Schedule& s) {
  Time total = 0;
  for (int j = 0; j < inst.n(); ++j) total += s.start_of[j] + inst.p(j);
  return total;
}

struct Simulation {
  Schedule schedule;
  Time total = 0;
  std::vector<int> order;
};

/// The four list schedulers with an explicit m x n matrix of earliest
/// starts. After placing job j on machine i with completion c, every
/// entry (i'', j'') of a remaining job with j'' in conflict with j or
/// i'' == i is raised to c.
inline Simulation simulate(const Instance& inst, const std::vector<int>& perm, Decoder rule) {
  const int n = inst.n(), m = inst.m();
  std::vector<std::vector<Time>> s(m, std::vector<Time>(n, 0));
  std::vector<int> left(perm);
  Simulation out;
  out.schedule = Schedule(n);
  auto est = [&](int j) {
    Time best = s[0][j];
    for (int i = 1; i < m; ++i) best = std::min(best, s[i][j]);
    return best;
  };
  while (!left.empty()) {
    std::size_t pick = 0;
    if (rule == Decoder::Ectf || rule == Decoder::GifflerThompson) {
      for (std::size_t q = 1; q < left.size(); ++q)
        if (est(left[q]) + inst.p(left[q]) < est(left[pick]) + inst.p(left[pick])) pick = q;
      if (rule == Decoder::GifflerThompson) {
        const int jp = left[pick];
        const Time ect = est(jp) + inst.p(jp);
        for (std::size_t q = 0; q < left.size(); ++q) {
          const int j = left[q];
          if ((j == jp || inst.conflict(j, jp)) && est(j) < ect) {
            pick = q;
            break;
          }
        }
      }
    } else if (rule == Decoder::NonDelay) {
      for (std::size_t q = 1; q < left.size(); ++q)
        if (est(left[q]) < est(left[pick])) pick = q;
    }
    const int j = left[pick];
    left.erase(left.begin() + static_cast<long>(pick));
    const Time start = est(j);
    int machine = 0;
    while (s[machine][j] != start) ++machine;
    const Time c = start + inst.p(j);
    out.schedule.machine_of[j] = machine;
    out.schedule.start_of[j] = start;
    out.total += c;
    out.order.push_back(j);
    for (int i = 0; i < m; ++i)
      for (int k : left)
        if ((inst.conflict(j, k) || i == machine) && s[i][k] < c) s[i][k] = c;
  }
  return out;
}

/// Every integer t before the makespan at which some machine is idle:
/// each job starting after t conflicts with a job running at t.
inline bool non_delay_scan(const Instance& inst, const Schedule& s) {
  const int n = inst.n();
  const Time end = makespan(inst, s);
  for (Time t = 0; t < end; ++t) {
    bool idle = false;
    for (int i = 0; i < inst.m() && !idle; ++i) {
      bool busy = false;
      for (int j = 0; j < n; ++j) busy = busy || (s.machine_of[j] == i && covers(inst, s, j, t));
      idle = !busy;
    }
    if (!idle) continue;
    for (int j = 0; j < n; ++j) {
      if (s.start_of[j] <= t) continue;
      bool blocked = false;
      for (int k = 0; k < n && !blocked; ++k) blocked = inst.conflict(j, k) && covers(inst, s, k, t);
      if (!blocked) return false;
    }
  }
  return true;
}

/// No job can be moved alone to an earlier integer start on any machine.
inline bool active_scan(const Instance& inst, const Schedule& s) {
  const int n = inst.n();
  Schedule trial = s;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < inst.m(); ++i) {
      for (Time t = 0; t < s.start_of[j]; ++t) {
        trial.machine_of[j] = i;
        trial.start_of[j] = t;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
          if (k == j || inst.p(j) == 0 || inst.p(k) == 0) continue;
          const bool overlap = t < trial.start_of[k] + inst.p(k) && trial.start_of[k] < t + inst.p(j);
          if (overlap && (trial.machine_of[k] == i || inst.conflict(j, k))) ok = false;
        }
        if (ok) return false;
      }
    }
    trial.machine_of[j] = s.machine_of[j];
    trial.start_of[j] = s.start_of[j];
  }
  return true;
}

/// Exhaustive optimum over left-justified schedules. Taking jobs in order
/// of their start times, every job of such a schedule starts at the max of
/// its machine's last completion and the completions of already started
/// jobs it conflicts with. The search enumerates these sequences with
/// non-decreasing starts, one machine per distinct machine horizon.
inline Time semi_active_optimum(const Instance& inst, Schedule* best_schedule = nullptr) {
  const int n = inst.n(), m = inst.m();
  std::vector<Time> horizon(m, 0), release(n, 0);
  std::vector<char> done(n, 0);
  Schedule cur(n);
  Time best = std::numeric_limits<Time>::max();
  std::vector<Time> sorted_p(inst.proc());
  std::sort(sorted_p.begin(), sorted_p.end());

  std::function<void(int, Time, Time)> dfs = [&](int placed, Time last_start, Time partial) {
    if (placed == n) {
      if (partial < best) {
        best = partial;
        if (best_schedule) *best_schedule = cur;
      }
      return;
    }
    // Remaining jobs start no earlier than last_start.
    Time lb = partial;
    int r = 0;
    for (int j = 0; j < n; ++j) r += !done[j];
    for (int q = 0; q < r; ++q) lb += last_start + sorted_p[q];
    if (lb >= best) return;
    for (int j = 0; j < n; ++j) {
      if (done[j]) continue;
      std::vector<Time> tried;
      for (int i = 0; i < m; ++i) {
        if (std::find(tried.begin(), tried.end(), horizon[i]) != tried.end()) continue;
        tried.push_back(horizon[i]);
        const Time start = std::max(release[j], horizon[i]);
        if (start < last_start) continue;
        const Time c = start + inst.p(j);
        const Time saved_h = horizon[i];
        std::vector<std::pair<int, Time>> saved;
        done[j] = 1;
        horizon[i] = c;
        for (int k = 0; k < n; ++k)
          if (!done[k] && inst.conflict(j, k) && release[k] < c) {
            saved.emplace_back(k, release[k]);
            release[k] = c;
          }
        cur.machine_of[j] = i;
        cur.start_of[j] = start;
        dfs(placed + 1, start, partial + c);
        for (auto [k, v] : saved) release[k] = v;
        horizon[i] = saved_h;
        done[j] = 0;
      }
    }
  };
  dfs(0, 0, 0);
  return best;
}

/// Maximum matching size by trying every edge choice for the lowest
/// unmatched vertex.
inline int brute_matching(const ConflictGraph& g) {
  const int n = g.size();
  std::vector<char> used(n, 0);
  std::function<int(int)> go = [&](int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = go(v + 1);
    for (int u = v + 1; u < n; ++u) {
      if (used[u] || !g.adjacent(u, v)) continue;
      used[u] = 1;
      best = std::max(best, 1 + go(v + 1));
      used[u] = 0;
    }
    used[v] = 0;
    return best;
  };
  return go(0);
}

inline Instance random_instance(confsched::Rng& rng, int n, int m, double density, Time pmin = 1, Time pmax = 10) {
  std::vector<Time> p(n);
  for (auto& v : p) v = rng.uniform_int(pmin, pmax);
  ConflictGraph g(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (rng.uniform01() < density) g.add_edge(j, k);
  return Instance(m, std::move(p), std::move(g));
}

inline std::vector<int> random_perm(confsched::Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  return perm;
}

}  // namespace oracle

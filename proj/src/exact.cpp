#include "confsched/exact.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "confsched/decoders.hpp"
#include "confsched/error.hpp"

namespace confsched {

namespace {

struct Subtree {
  Time best = std::numeric_limits<Time>::max();
  std::vector<JobId> perm;
};

Subtree enumerate_from(const Instance& inst, JobId first, std::atomic<Time>& incumbent) {
  Subtree out;
  std::vector<JobId> perm{first};
  for (int j = 0; j < inst.n(); ++j)
    if (j != first) perm.push_back(j);
  DecodeWorkspace ws;
  do {
    const Time cutoff = incumbent.load(std::memory_order_relaxed);
    const Time value = ws.evaluate(inst, perm, Decoder::GifflerThompson, cutoff);
    if (value < out.best) {
      out.best = value;
      out.perm = perm;
      Time seen = incumbent.load(std::memory_order_relaxed);
      while (value < seen && !incumbent.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
      }
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

}  // namespace

ExactResult exact_gt_enum(const Instance& inst, unsigned threads) {
  const int n = inst.n();
  if (n > kGtEnumMaxJobs) {
    throw GuardError("permutation enumeration supports at most " + std::to_string(kGtEnumMaxJobs) + " jobs, got " +
                     std::to_string(n));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (n <= 6) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

  std::atomic<Time> incumbent{std::numeric_limits<Time>::max()};
  std::vector<Subtree> results(n);
  if (threads == 1) {
    for (int f = 0; f < n; ++f) results[f] = enumerate_from(inst, f, incumbent);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int f = next++; f < n; f = next++) results[f] = enumerate_from(inst, f, incumbent);
      });
    }
  }

  int winner = 0;
  for (int f = 1; f < n; ++f)
    if (results[f].best < results[winner].best) winner = f;
  auto decoded = decode(inst, results[winner].perm, Decoder::GifflerThompson);
  ExactResult r;
  r.schedule = std::move(decoded.schedule);
  r.value = decoded.total;
  r.perm = results[winner].perm;
  return r;
}

namespace {

class TimeIndexedSearch {
 public:
  TimeIndexedSearch(const Instance& inst, Time horizon)
      : inst_(inst), horizon_(horizon), current_(inst.n()), suffix_(inst.n() + 1, 0) {
    for (int j = inst.n() - 1; j >= 0; --j) suffix_[j] = suffix_[j + 1] + inst.p(j);
  }

  void seed_upper_bound(Time value, const Schedule& sched) {
    best_ = value;
    best_schedule_ = sched;
  }

  void run() { place(0, 0, 0); }

  Time best() const { return best_; }
  const Schedule& best_schedule() const { return best_schedule_; }

 private:
  bool clashes(JobId j, MachineId i, Time start) const {
    const Time pj = inst_.p(j);
    if (pj == 0) return false;
    for (JobId k = 0; k < j; ++k) {
      const Time pk = inst_.p(k);
      if (pk == 0) continue;
      const Time sk = current_.start_of[k];
      if (!(start < sk + pk && sk < start + pj)) continue;
      if (current_.machine_of[k] == i || inst_.conflict(j, k)) return true;
    }
    return false;
  }

  void place(JobId j, int machines_used, Time partial) {
    if (j == inst_.n()) {
      if (partial < best_ && check_feasible(inst_, current_)) {
        best_ = partial;
        best_schedule_ = current_;
      }
      return;
    }
    const Time pj = inst_.p(j);
    const int machine_limit = std::min(inst_.m(), machines_used + 1);
    for (Time t = 0; t + pj <= horizon_; ++t) {
      // Every later job completes no earlier than its own length.
      if (partial + t + suffix_[j] >= best_) break;
      for (MachineId i = 0; i < machine_limit; ++i) {
        if (clashes(j, i, t)) continue;
        current_.machine_of[j] = i;
        current_.start_of[j] = t;
        place(j + 1, std::max(machines_used, i + 1), partial + t + pj);
      }
    }
  }

  const Instance& inst_;
  Time horizon_;
  Schedule current_;
  std::vector<Time> suffix_;
  Time best_ = std::numeric_limits<Time>::max();
  Schedule best_schedule_;
};

}  // namespace

ExactResult exact_time_indexed(const Instance& inst, std::optional<Time> horizon) {
  const int n = inst.n();
  const Time h = horizon.value_or(inst.total_processing());
  if (n > kTimeIndexedMaxJobs || h > kTimeIndexedMaxHorizon) {
    throw GuardError("time-indexed enumeration supports n <= " + std::to_string(kTimeIndexedMaxJobs) +
                     " and horizon <= " + std::to_string(kTimeIndexedMaxHorizon) + ", got n = " + std::to_string(n) +
                     ", horizon = " + std::to_string(h));
  }
  if (h < inst.max_processing()) throw ParameterError("horizon shorter than the longest job");

  TimeIndexedSearch search(inst, h);
  // Everything back-to-back on one machine is always feasible; seed with it
  // when it fits the horizon (value + 1 keeps equal-valued schedules open).
  if (inst.total_processing() <= h) {
    Schedule chain(n);
    Time t = 0, total = 0;
    for (int j = 0; j < n; ++j) {
      chain.start_of[j] = t;
      t += inst.p(j);
      total += t;
    }
    search.seed_upper_bound(total + 1, chain);
  }
  search.run();
  if (search.best() == std::numeric_limits<Time>::max()) throw Error("no feasible schedule within the horizon");
  ExactResult r;
  r.schedule = search.best_schedule();
  r.value = total_flow_time(inst, r.schedule);
  return r;
}

}  // namespace confsched

#pragma once

// Permutation-to-schedule builders.
//
// All four variants share one mechanism: every job j carries an earliest
// start s_j^i on each machine i, initially 0. Each step picks a job by the
// variant rule, starts it at s_j = min_i s_j^i on the lowest-indexed
// machine attaining that minimum, and raises s_{j''}^{i''} to the new
// completion time for every remaining job j'' that conflicts with it and
// for every remaining job on its machine. Updates are forward-only: idle
// gaps left behind are never back-filled.
//
// Rules ("first" always means earliest position in the permutation):
//   Fifo      first remaining job
//   Ectf      first job minimising s_j + p_j
//   GifflerThompson  j' = first job minimising s_j + p_j; then the first job
//             of {j'} and its conflicts with s_j < s_j' + p_j' (j' itself
//             when that set is empty, i.e. p_j' = 0 and no conflict starts
//             strictly earlier)
//   NonDelay  first job minimising s_j

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confsched/core.hpp"

namespace confsched {

enum class Decoder { Fifo, GifflerThompson, Ectf, NonDelay };

std::string_view to_string(Decoder d);
/// Accepts FIFO, GT, ECTF, ND (any case). Throws ParameterError.
Decoder parse_decoder(std::string_view name);

/// Earliest machine-feasible start times of the remaining jobs. Because
/// every update raises either all entries of one machine or all entries
/// of one job, s_j^i factors as max(release_j, horizon_i): the start
/// implied by already placed conflicting jobs and the completion time of
/// the last job placed on machine i.
class StartMatrix {
 public:
  StartMatrix() = default;
  StartMatrix(int machines, int jobs) { reset(machines, jobs); }
  void reset(int machines, int jobs);

  Time at(MachineId i, JobId j) const { return release_[j] > horizon_[i] ? release_[j] : horizon_[i]; }
  /// s_j = min over machines.
  Time earliest(JobId j) const { return release_[j] > min_horizon_ ? release_[j] : min_horizon_; }
  /// Lowest-indexed machine attaining earliest(j).
  MachineId machine_for(JobId j) const;
  /// Records j on machine i completing at `completion`; `conflicts` are the
  /// jobs whose release is raised.
  void place(MachineId i, Time completion, std::span<const int> conflicts);

  int machines() const noexcept { return static_cast<int>(horizon_.size()); }
  int jobs() const noexcept { return static_cast<int>(release_.size()); }

 private:
  std::vector<Time> release_;
  std::vector<Time> horizon_;
  Time min_horizon_ = 0;
};

struct DecodeResult {
  Schedule schedule;
  Time total = 0;
  /// Jobs in the order the builder placed them.
  std::vector<JobId> order;
};

/// Builds the schedule for `perm` (must be a permutation of 0..n-1; throws
/// StructuralError otherwise).
DecodeResult decode(const Instance& inst, std::span<const JobId> perm, Decoder variant);
inline DecodeResult decode(const Instance& inst, const Chromosome& c, Decoder variant) {
  return decode(inst, c.perm, variant);
}

/// Total completion time only, without keeping the schedule. The
/// permutation is not validated. Returns as soon as the partial sum
/// exceeds `cutoff`, with some value greater than `cutoff`.
Time decode_value(const Instance& inst, std::span<const JobId> perm, Decoder variant,
                  Time cutoff = std::numeric_limits<Time>::max());

/// Reusable buffers for decode_value; one per thread.
class DecodeWorkspace {
 public:
  Time evaluate(const Instance& inst, std::span<const JobId> perm, Decoder variant,
                Time cutoff = std::numeric_limits<Time>::max(), Schedule* out = nullptr,
                std::vector<JobId>* order = nullptr);

 private:
  StartMatrix starts_;
  std::vector<JobId> remaining_;
};

}  // namespace confsched

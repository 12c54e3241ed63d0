#pragma once

// Exhaustive optima for desk-scale instances. Two unrelated routes:
// enumeration of Giffler-Thompson decodes over all permutations, and a
// direct search over machine assignments and integer start times.

#include <optional>

#include "confsched/core.hpp"

namespace confsched {

inline constexpr int kGtEnumMaxJobs = 9;
inline constexpr int kTimeIndexedMaxJobs = 5;
inline constexpr Time kTimeIndexedMaxHorizon = 20;

struct ExactResult {
  Schedule schedule;
  Time value = 0;
  std::vector<JobId> perm;  ///< permutation realising the optimum (GT route only)
};

/// Minimum of decode(inst, perm, GT) over all n! permutations. Subtrees by
/// first job run on up to `threads` workers sharing an incumbent; the
/// returned permutation is the lexicographically smallest optimal one.
/// GuardError above kGtEnumMaxJobs jobs.
ExactResult exact_gt_enum(const Instance& inst, unsigned threads = 0);

/// Exhaustive search over machine assignments and start times in
/// [0, horizon - p_j] (default horizon: sum of p_j). Machines are treated
/// as interchangeable. GuardError above kTimeIndexedMaxJobs jobs or
/// kTimeIndexedMaxHorizon.
ExactResult exact_time_indexed(const Instance& inst, std::optional<Time> horizon = std::nullopt);

}  // namespace confsched

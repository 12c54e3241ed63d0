#pragma once

// Domain types for Pm | conflict graph | sum C_j: instances, schedules,
// chromosomes, feasibility and the deviation/gap metrics.
//
// Time is integral. Intervals are half-open [s, s + p), so two jobs may
// touch end-to-start; zero-length jobs occupy no time at all. Jobs are
// 0-based in memory and 1-based in every file format.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace confsched {

using Time = std::int64_t;
using JobId = int;
using MachineId = int;

/// Simple undirected graph over jobs, stored as a dense adjacency matrix
/// plus sorted neighbour lists.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(int vertices);

  /// Builds from an explicit boolean matrix; rejects asymmetry and a
  /// non-zero diagonal.
  static ConflictGraph from_matrix(const std::vector<std::vector<bool>>& adjacency);
  static ConflictGraph from_edges(int vertices, std::span<const std::pair<int, int>> edges);
  static ConflictGraph complete(int vertices);

  /// Adds {a, b}. Self-loops and out-of-range endpoints throw
  /// ValidationError; adding an existing edge is a no-op.
  void add_edge(int a, int b);

  int size() const noexcept { return n_; }
  bool adjacent(int a, int b) const noexcept { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  const std::vector<int>& neighbors(int v) const { return lists_[v]; }
  int degree(int v) const { return static_cast<int>(lists_[v].size()); }
  std::size_t edge_count() const noexcept { return edges_; }
  /// Edges as (j, k) with j < k in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  ConflictGraph complement() const;

  bool operator==(const ConflictGraph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> lists_;
};

/// n jobs with processing times, m identical machines and the conflict
/// graph. Immutable once built.
class Instance {
 public:
  Instance(int machines, std::vector<Time> proc, ConflictGraph conflicts, std::string id = {});

  int n() const noexcept { return static_cast<int>(proc_.size()); }
  int m() const noexcept { return machines_; }
  Time p(JobId j) const { return proc_[j]; }
  const std::vector<Time>& proc() const noexcept { return proc_; }
  const ConflictGraph& conflicts() const noexcept { return conflicts_; }
  bool conflict(JobId a, JobId b) const noexcept { return conflicts_.adjacent(a, b); }
  const std::string& id() const noexcept { return id_; }
  Time total_processing() const noexcept;
  Time max_processing() const noexcept;
  /// |E| / C(n, 2); 0 for n < 2.
  double edge_density() const noexcept;

  Instance with_machines(int machines) const { return Instance(machines, proc_, conflicts_, id_); }

  bool operator==(const Instance& other) const = default;

 private:
  int machines_;
  std::vector<Time> proc_;
  ConflictGraph conflicts_;
  std::string id_;
};

/// Machine and start time per job. Completion is start + p.
struct Schedule {
  std::vector<MachineId> machine_of;
  std::vector<Time> start_of;

  Schedule() = default;
  explicit Schedule(int n) : machine_of(n, 0), start_of(n, 0) {}

  int size() const noexcept { return static_cast<int>(start_of.size()); }
  Time completion(const Instance& inst, JobId j) const { return start_of[j] + inst.p(j); }

  bool operator==(const Schedule& other) const = default;
};

/// A job permutation with its cached fitness (total completion time).
struct Chromosome {
  std::vector<JobId> perm;
  std::optional<Time> fitness;

  Chromosome() = default;
  explicit Chromosome(std::vector<JobId> order, std::optional<Time> value = std::nullopt)
      : perm(std::move(order)), fitness(value) {}

  int size() const noexcept { return static_cast<int>(perm.size()); }
  Time value() const { return fitness.value(); }
};

/// True iff perm is a bijection on {0..n-1}.
bool is_permutation(std::span<const JobId> perm, int n);
std::vector<JobId> identity_permutation(int n);

/// Checks machine-disjointness and conflict-disjointness of all positive
/// length intervals. Throws StructuralError when the schedule does not
/// fit the instance (length or machine index out of range).
bool check_feasible(const Instance& inst, const Schedule& sched);

/// Sum over jobs of start + p. Throws StructuralError on length mismatch.
Time total_flow_time(const Instance& inst, const Schedule& sched);

/// Exact non-negative rational, kept reduced.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  /// Value multiplied by 100 with a fixed number of decimals.
  std::string percent(int decimals = 3) const;
  std::string str() const;

  bool operator==(const Fraction&) const = default;
};

/// Relative deviation and gap. An empty optional means the quantity is
/// undefined (deviation with best_lb = 0, gap with best_ub = 0).
struct MetricReport {
  Time best_lb = 0;
  Time best_ub = 0;
  Time value = 0;
  std::optional<Fraction> deviation_from_lb;
  std::optional<Fraction> gap;

  bool deviation_defined() const noexcept { return deviation_from_lb.has_value(); }
};

/// (value - best_lb) / best_lb and (best_ub - best_lb) / best_ub.
/// Throws ParameterError if best_lb > best_ub or a value is negative.
MetricReport metrics(Time best_lb, Time best_ub, Time value);

}  // namespace confsched

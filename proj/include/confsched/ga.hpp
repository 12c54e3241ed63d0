#pragma once

// Permutation-encoded genetic algorithm with a distinct-fitness population
// and an optional local search over the final population.
//
// Random draws come from one Rng per run, in this order: seeding (random
// permutations as Fisher-Yates shuffles), then per iteration: parent 1
// (uniform_int over the N (N + 1) / 2 rank tickets), parent 2 (index,
// redrawn once on a clash), crossover cut points, offspring coin, mutation
// trial (uniform01, skipped when p_m is 0 or 1), mutation positions,
// victim rank.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "confsched/core.hpp"
#include "confsched/decoders.hpp"

namespace confsched {

class Rng;

enum class Crossover { X1, OX, LOX };
enum class Mutation { Swap, Move };
enum class Seeding { Random, Hybrid };

std::string_view to_string(Crossover c);
std::string_view to_string(Mutation m);
std::string_view to_string(Seeding s);
Crossover parse_crossover(std::string_view name);
Mutation parse_mutation(std::string_view name);
Seeding parse_seeding(std::string_view name);

struct GaConfig {
  int pop_size = 50;
  double mutation_prob = 0.2;
  /// Iteration cap; 0 means 100 * pop_size * n.
  std::int64_t max_iters = 0;
  std::int64_t max_no_improve = 50000;
  int max_dup_tries = 1000;
  Decoder decoder = Decoder::NonDelay;
  Crossover crossover = Crossover::LOX;
  Mutation mutation = Mutation::Swap;
  Seeding seeding = Seeding::Hybrid;
  /// Local-search budget per final member; 0 disables local search.
  int ls_iters = 0;
  std::uint64_t rng_seed = 0;

  /// Throws ParameterError when a field is out of range.
  void validate() const;
  std::int64_t iteration_cap(int n) const { return max_iters > 0 ? max_iters : 100LL * pop_size * n; }

  /// Component tuning baseline: N_p = 50, p_m = 0.2, I_noimp = 50000,
  /// T_max = 1000, ND decoder, hybrid seeding, LOX, swap.
  static GaConfig tuning_baseline();
  /// Tuned variant: systematic mutation (p_m = 1) and N_p = 300 / 400 / 700
  /// for conflict densities near 0.2 / 0.5 / 0.8 (split at 0.35 and 0.65).
  static GaConfig paper_preset(double density);
  /// paper_preset plus local search: 500 iterations for n <= 50, 700 above.
  static GaConfig paper_ls_preset(int n, double density);
};

/// Members sorted by descending fitness: position 0 holds the worst and has
/// rank 1, the last position holds the best and has rank size(). Fitness
/// values are pairwise distinct.
class Population {
 public:
  Population() = default;

  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  const Chromosome& at_rank(int rank) const { return members_[rank - 1]; }
  const Chromosome& best() const { return members_.back(); }
  const Chromosome& worst() const { return members_.front(); }
  const std::vector<Chromosome>& members() const noexcept { return members_; }
  bool contains_fitness(Time f) const { return fitness_.contains(f); }

  /// Adds an evaluated chromosome with a new fitness value; false if the
  /// value is already present.
  bool insert(Chromosome c);
  /// Removes the member of the given rank.
  Chromosome remove_rank(int rank);

  /// Sorted descending and pairwise distinct.
  bool invariants_hold() const;

 private:
  std::vector<Chromosome> members_;
  std::unordered_set<Time> fitness_;
};

/// Fitness of a permutation under one decoder.
class Evaluator {
 public:
  Evaluator(const Instance& inst, Decoder decoder) : inst_(inst), decoder_(decoder) {}
  Time operator()(std::span<const JobId> perm) { return ws_.evaluate(inst_, perm, decoder_); }
  void evaluate(Chromosome& c) { c.fitness = (*this)(c.perm); }
  const Instance& instance() const noexcept { return inst_; }
  Decoder decoder() const noexcept { return decoder_; }

 private:
  const Instance& inst_;
  Decoder decoder_;
  DecodeWorkspace ws_;
};

/// The eight sorted seeds in insertion order: p_j, c_j, c_j / p_j, a_j / p_j,
/// each decreasing then increasing (c_j conflict degree, a_j agreement
/// degree; x / 0 sorts as +infinity). Ties keep the lower job index first.
std::vector<std::vector<JobId>> sorted_seeds(const Instance& inst);

std::vector<JobId> random_permutation(int n, Rng& rng);

Population seed_population(const Instance& inst, const GaConfig& cfg, Rng& rng, Evaluator& eval);

/// Rank selection: parent 1 has probability 2k / (N (N + 1)) for rank k,
/// parent 2 is uniform; parent 2 is redrawn once if it equals parent 1.
/// Returns ranks.
std::pair<int, int> select_parents(const Population& pop, Rng& rng);
/// Rank-k probability 2k / (N (N + 1)).
double rank_probability(int rank, int size);

/// Deterministic operator kernels (positions 0-based, inclusive segments).
std::pair<std::vector<JobId>, std::vector<JobId>> crossover_x1(std::span<const JobId> a, std::span<const JobId> b,
                                                               int cut);
std::vector<JobId> crossover_lox(std::span<const JobId> donor, std::span<const JobId> filler, int first, int last);
std::vector<JobId> crossover_ox(std::span<const JobId> donor, std::span<const JobId> filler, int first, int last);
std::vector<JobId> mutate_swap(std::span<const JobId> perm, int a, int b);
/// Removes the job at `from` and reinserts it so it ends at index `to`.
std::vector<JobId> mutate_move(std::span<const JobId> perm, int from, int to);

/// Random-parameter operators; children 1 and 2 swap parental roles.
std::pair<std::vector<JobId>, std::vector<JobId>> crossover(std::span<const JobId> a, std::span<const JobId> b,
                                                            Crossover variant, Rng& rng);
std::vector<JobId> mutate(std::span<const JobId> perm, Mutation variant, Rng& rng);

/// Removes a uniformly drawn member among ranks 1..floor(N/2) and inserts
/// `child`. A population of one keeps its member and grows instead.
/// Returns false (population untouched) when the child's fitness is
/// already present.
bool replace(Population& pop, Chromosome child, Rng& rng);

enum class StopReason { MaxIterations, MatchedLowerBound, NoImprovement };
std::string_view to_string(StopReason r);

struct IterationLog {
  std::int64_t iteration;
  Time best;
  const Population& population;
  bool inserted;
};

struct GaStats {
  int initial_pop_size = 0;
  int final_pop_size = 0;
  std::int64_t generations = 0;
  std::int64_t insertions = 0;
  StopReason stop = StopReason::MaxIterations;
  Time lower_bound = 0;
  Time ga_best = 0;  ///< before local search
  bool local_search_applied = false;
  double seconds = 0.0;
};

struct GaResult {
  Schedule schedule;
  Time value = 0;
  std::vector<JobId> perm;
  Decoder decoder = Decoder::NonDelay;  ///< decoder that realises `value` for `perm`
  GaStats stats;
};

using IterationObserver = std::function<void(const IterationLog&)>;

/// Runs the GA until the iteration cap, a best fitness equal to the best
/// lower bound (LB1..LB4), or max_no_improve iterations without a strict
/// improvement of the best fitness. With ls_iters > 0 every member of the
/// final population is then passed through local_search.
GaResult run_ga(const Instance& inst, const GaConfig& cfg, const IterationObserver& observer = {});

struct LocalSearchResult {
  Chromosome chromosome;  ///< fitness = min of the ECTF and ND values
  Decoder decoder = Decoder::Ectf;
  std::int64_t evaluations = 0;
  bool local_optimum = false;
};

/// First-improvement descent cycling through move, swap, Or-Opt (adjacent
/// pair reinsertion) and 2-Opt (segment reversal). Each neighbourhood keeps
/// a cursor over its (i, k) pairs in lexicographic order and resumes where
/// it stopped; after an improving step the next neighbourhood takes over.
/// Candidates are scored with both ECTF and ND, keeping the smaller value.
/// Stops after `max_iters` candidate evaluations or when all four
/// neighbourhoods are exhausted without improvement.
LocalSearchResult local_search(const Instance& inst, const Chromosome& start, int max_iters);

}  // namespace confsched

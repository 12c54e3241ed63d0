#include "confsched/ga.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>

#include "confsched/bounds.hpp"
#include "confsched/error.hpp"
#include "confsched/rng.hpp"

namespace confsched {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Crossover c) {
  switch (c) {
    case Crossover::X1: return "X1";
    case Crossover::OX: return "OX";
    case Crossover::LOX: return "LOX";
  }
  return "?";
}

std::string_view to_string(Mutation m) { return m == Mutation::Swap ? "swap" : "move"; }
std::string_view to_string(Seeding s) { return s == Seeding::Hybrid ? "hybrid" : "random"; }

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::MaxIterations: return "max-iterations";
    case StopReason::MatchedLowerBound: return "matched-lower-bound";
    case StopReason::NoImprovement: return "no-improvement";
  }
  return "?";
}

Crossover parse_crossover(std::string_view name) {
  const auto u = upper(name);
  if (u == "X1") return Crossover::X1;
  if (u == "OX") return Crossover::OX;
  if (u == "LOX") return Crossover::LOX;
  throw ParameterError("unknown crossover '" + std::string(name) + "' (expected X1, OX or LOX)");
}

Mutation parse_mutation(std::string_view name) {
  const auto u = upper(name);
  if (u == "SWAP") return Mutation::Swap;
  if (u == "MOVE") return Mutation::Move;
  throw ParameterError("unknown mutation '" + std::string(name) + "' (expected swap or move)");
}

Seeding parse_seeding(std::string_view name) {
  const auto u = upper(name);
  if (u == "HYBRID") return Seeding::Hybrid;
  if (u == "RANDOM") return Seeding::Random;
  throw ParameterError("unknown seeding '" + std::string(name) + "' (expected random or hybrid)");
}

void GaConfig::validate() const {
  if (pop_size < 2) throw ParameterError("pop_size must be at least 2");
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw ParameterError("mutation_prob must lie in [0, 1]");
  if (max_iters < 0) throw ParameterError("max_iters must be positive (0 selects 100 * N_p * n)");
  if (max_no_improve < 1) throw ParameterError("max_no_improve must be at least 1");
  if (max_dup_tries < 1) throw ParameterError("max_dup_tries must be at least 1");
  if (ls_iters < 0) throw ParameterError("ls_iters must be non-negative");
}

GaConfig GaConfig::tuning_baseline() { return GaConfig{}; }

GaConfig GaConfig::paper_preset(double density) {
  GaConfig cfg;
  cfg.mutation_prob = 1.0;
  cfg.pop_size = density < 0.35 ? 300 : density < 0.65 ? 400 : 700;
  return cfg;
}

GaConfig GaConfig::paper_ls_preset(int n, double density) {
  GaConfig cfg = paper_preset(density);
  cfg.ls_iters = n <= 50 ? 500 : 700;
  return cfg;
}

bool Population::insert(Chromosome c) {
  const Time f = c.value();
  if (!fitness_.insert(f).second) return false;
  auto pos = std::upper_bound(members_.begin(), members_.end(), f,
                              [](Time v, const Chromosome& m) { return v > m.value(); });
  members_.insert(pos, std::move(c));
  return true;
}

Chromosome Population::remove_rank(int rank) {
  Chromosome out = std::move(members_[rank - 1]);
  members_.erase(members_.begin() + (rank - 1));
  fitness_.erase(out.value());
  return out;
}

bool Population::invariants_hold() const {
  if (fitness_.size() != members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i].fitness || !fitness_.contains(*members_[i].fitness)) return false;
    if (i > 0 && !(members_[i - 1].value() > members_[i].value())) return false;
  }
  return true;
}

std::vector<std::vector<JobId>> sorted_seeds(const Instance& inst) {
  const int n = inst.n();
  std::vector<Time> conf(n), agree(n);
  for (int j = 0; j < n; ++j) {
    conf[j] = inst.conflicts().degree(j);
    agree[j] = n - 1 - conf[j];
  }
  // Ratio x / p as a comparable pair; p = 0 is +infinity.
  auto ratio_less = [&](const std::vector<Time>& x, JobId a, JobId b) {
    const Time pa = inst.p(a), pb = inst.p(b);
    if (pa == 0 || pb == 0) return pa != 0 && pb == 0;
    return static_cast<__int128>(x[a]) * pb < static_cast<__int128>(x[b]) * pa;
  };
  std::vector<std::function<bool(JobId, JobId)>> keys = {
      [&](JobId a, JobId b) { return inst.p(a) < inst.p(b); },
      [&](JobId a, JobId b) { return conf[a] < conf[b]; },
      [&](JobId a, JobId b) { return ratio_less(conf, a, b); },
      [&](JobId a, JobId b) { return ratio_less(agree, a, b); },
  };
  std::vector<std::vector<JobId>> out;
  for (const auto& less : keys) {
    auto dec = identity_permutation(n);
    std::stable_sort(dec.begin(), dec.end(), [&](JobId a, JobId b) { return less(b, a); });
    auto inc = identity_permutation(n);
    std::stable_sort(inc.begin(), inc.end(), less);
    out.push_back(std::move(dec));
    out.push_back(std::move(inc));
  }
  return out;
}

std::vector<JobId> random_permutation(int n, Rng& rng) {
  auto perm = identity_permutation(n);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  return perm;
}

Population seed_population(const Instance& inst, const GaConfig& cfg, Rng& rng, Evaluator& eval) {
  Population pop;
  if (cfg.seeding == Seeding::Hybrid) {
    for (auto& perm : sorted_seeds(inst)) {
      if (pop.size() >= cfg.pop_size) break;
      Chromosome c(std::move(perm));
      eval.evaluate(c);
      pop.insert(std::move(c));
    }
  }
  while (pop.size() < cfg.pop_size) {
    bool added = false;
    for (int attempt = 0; attempt < cfg.max_dup_tries && !added; ++attempt) {
      Chromosome c(random_permutation(inst.n(), rng));
      eval.evaluate(c);
      added = pop.insert(std::move(c));
    }
    if (!added) break;
  }
  return pop;
}

double rank_probability(int rank, int size) {
  return 2.0 * rank / (static_cast<double>(size) * (size + 1));
}

std::pair<int, int> select_parents(const Population& pop, Rng& rng) {
  const int n = pop.size();
  if (n <= 1) return {1, 1};
  // Rank k owns k of the N (N + 1) / 2 tickets.
  const std::int64_t tickets = static_cast<std::int64_t>(n) * (n + 1) / 2;
  const std::int64_t ticket = rng.uniform_int(0, tickets - 1);
  int lo = 1, hi = n;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (static_cast<std::int64_t>(mid) * (mid + 1) / 2 > ticket) hi = mid;
    else lo = mid + 1;
  }
  const int first = lo;
  int second = rng.index(n) + 1;
  if (second == first) second = rng.index(n) + 1;
  return {first, second};
}

std::pair<std::vector<JobId>, std::vector<JobId>> crossover_x1(std::span<const JobId> a, std::span<const JobId> b,
                                                               int cut) {
  auto one = [cut](std::span<const JobId> head, std::span<const JobId> tail) {
    std::vector<JobId> child(head.begin(), head.begin() + cut);
    std::vector<char> used(head.size(), 0);
    for (JobId j : child) used[j] = 1;
    for (JobId j : tail)
      if (!used[j]) child.push_back(j);
    return child;
  };
  return {one(a, b), one(b, a)};
}

std::vector<JobId> crossover_lox(std::span<const JobId> donor, std::span<const JobId> filler, int first, int last) {
  const int n = static_cast<int>(donor.size());
  std::vector<JobId> child(n, -1);
  std::vector<char> used(n, 0);
  for (int i = first; i <= last; ++i) {
    child[i] = donor[i];
    used[donor[i]] = 1;
  }
  int slot = 0;
  for (JobId j : filler) {
    if (used[j]) continue;
    while (slot >= first && slot <= last) ++slot;
    child[slot++] = j;
  }
  return child;
}

std::vector<JobId> crossover_ox(std::span<const JobId> donor, std::span<const JobId> filler, int first, int last) {
  const int n = static_cast<int>(donor.size());
  std::vector<JobId> child(n, -1);
  std::vector<char> used(n, 0);
  for (int i = first; i <= last; ++i) {
    child[i] = donor[i];
    used[donor[i]] = 1;
  }
  int slot = (last + 1) % n;
  for (int step = 0; step < n; ++step) {
    const JobId j = filler[(last + 1 + step) % n];
    if (used[j]) continue;
    child[slot] = j;
    slot = (slot + 1) % n;
  }
  return child;
}

std::vector<JobId> mutate_swap(std::span<const JobId> perm, int a, int b) {
  std::vector<JobId> out(perm.begin(), perm.end());
  std::swap(out[a], out[b]);
  return out;
}

std::vector<JobId> mutate_move(std::span<const JobId> perm, int from, int to) {
  std::vector<JobId> out(perm.begin(), perm.end());
  const JobId j = out[from];
  out.erase(out.begin() + from);
  out.insert(out.begin() + to, j);
  return out;
}

std::pair<std::vector<JobId>, std::vector<JobId>> crossover(std::span<const JobId> a, std::span<const JobId> b,
                                                            Crossover variant, Rng& rng) {
  const int n = static_cast<int>(a.size());
  if (n < 2) return {{a.begin(), a.end()}, {b.begin(), b.end()}};
  if (variant == Crossover::X1) return crossover_x1(a, b, static_cast<int>(rng.uniform_int(1, n - 1)));
  int first = rng.index(n), last = rng.index(n);
  if (first > last) std::swap(first, last);
  if (variant == Crossover::LOX) return {crossover_lox(a, b, first, last), crossover_lox(b, a, first, last)};
  return {crossover_ox(a, b, first, last), crossover_ox(b, a, first, last)};
}

std::vector<JobId> mutate(std::span<const JobId> perm, Mutation variant, Rng& rng) {
  const int n = static_cast<int>(perm.size());
  if (n < 2) return {perm.begin(), perm.end()};
  const int a = rng.index(n);
  int b = rng.index(n - 1);
  if (b >= a) ++b;
  return variant == Mutation::Swap ? mutate_swap(perm, a, b) : mutate_move(perm, a, b);
}

bool replace(Population& pop, Chromosome child, Rng& rng) {
  if (pop.contains_fitness(child.value())) return false;
  const int n = pop.size();
  if (n >= 2) pop.remove_rank(static_cast<int>(rng.uniform_int(1, n / 2)));
  return pop.insert(std::move(child));
}

GaResult run_ga(const Instance& inst, const GaConfig& cfg, const IterationObserver& observer) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.rng_seed);
  Evaluator eval(inst, cfg.decoder);
  const Time bound = best_bound(inst).best;

  GaResult result;
  GaStats& st = result.stats;
  st.lower_bound = bound;
  Population pop = seed_population(inst, cfg, rng, eval);
  st.initial_pop_size = pop.size();

  Time best = pop.best().value();
  std::int64_t since_improve = 0;
  const std::int64_t cap = cfg.iteration_cap(inst.n());
  const bool always_mutate = cfg.mutation_prob >= 1.0;
  const bool never_mutate = cfg.mutation_prob <= 0.0;

  if (best == bound) {
    st.stop = StopReason::MatchedLowerBound;
  } else {
    st.stop = StopReason::MaxIterations;
    while (st.generations < cap) {
      ++st.generations;
      const auto [r1, r2] = select_parents(pop, rng);
      auto children = crossover(pop.at_rank(r1).perm, pop.at_rank(r2).perm, cfg.crossover, rng);
      Chromosome child(rng.coin() ? std::move(children.first) : std::move(children.second));
      const bool try_mutation = always_mutate || (!never_mutate && rng.bernoulli(cfg.mutation_prob));
      bool evaluated = false;
      if (try_mutation) {
        Chromosome mutant(mutate(child.perm, cfg.mutation, rng));
        eval.evaluate(mutant);
        if (!pop.contains_fitness(mutant.value())) {
          child = std::move(mutant);
          evaluated = true;
        }
      }
      if (!evaluated) eval.evaluate(child);
      const bool inserted = replace(pop, std::move(child), rng);
      if (inserted) ++st.insertions;

      if (pop.best().value() < best) {
        best = pop.best().value();
        since_improve = 0;
      } else {
        ++since_improve;
      }
      if (observer) observer(IterationLog{st.generations, best, pop, inserted});
      if (best == bound) {
        st.stop = StopReason::MatchedLowerBound;
        break;
      }
      if (since_improve >= cfg.max_no_improve) {
        st.stop = StopReason::NoImprovement;
        break;
      }
    }
  }

  st.final_pop_size = pop.size();
  st.ga_best = best;
  result.value = best;
  result.perm = pop.best().perm;
  result.decoder = cfg.decoder;

  if (cfg.ls_iters > 0 && best != bound) {
    st.local_search_applied = true;
    for (int rank = pop.size(); rank >= 1; --rank) {
      const auto ls = local_search(inst, pop.at_rank(rank), cfg.ls_iters);
      if (ls.chromosome.value() < result.value) {
        result.value = ls.chromosome.value();
        result.perm = ls.chromosome.perm;
        result.decoder = ls.decoder;
      }
      if (result.value == bound) break;
    }
  }

  auto decoded = decode(inst, result.perm, result.decoder);
  if (decoded.total != result.value) throw Error("internal: GA best does not reproduce under its decoder");
  result.schedule = std::move(decoded.schedule);
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace confsched

#include "confsched/core.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "confsched/error.hpp"

namespace confsched {

ConflictGraph::ConflictGraph(int vertices)
    : n_(vertices), adj_(static_cast<std::size_t>(vertices) * vertices, 0), lists_(vertices) {
  if (vertices < 0) throw ValidationError("graph size must be non-negative");
}

ConflictGraph ConflictGraph::from_matrix(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  ConflictGraph g(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(adjacency[a].size()) != n) throw ValidationError("adjacency matrix is not square");
    if (adjacency[a][a]) throw ValidationError("self-loop on vertex " + std::to_string(a + 1));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adjacency[a][b] != adjacency[b][a]) {
        throw ValidationError("adjacency matrix is not symmetric at (" + std::to_string(a + 1) + ", " +
                              std::to_string(b + 1) + ")");
      }
      if (adjacency[a][b]) g.add_edge(a, b);
    }
  }
  return g;
}

ConflictGraph ConflictGraph::from_edges(int vertices, std::span<const std::pair<int, int>> edges) {
  ConflictGraph g(vertices);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

ConflictGraph ConflictGraph::complete(int vertices) {
  ConflictGraph g(vertices);
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b) g.add_edge(a, b);
  return g;
}

void ConflictGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw ValidationError("edge (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") out of range");
  }
  if (a == b) throw ValidationError("self-loop on vertex " + std::to_string(a + 1));
  if (adjacent(a, b)) return;
  adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
  adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
  lists_[a].insert(std::lower_bound(lists_[a].begin(), lists_[a].end(), b), b);
  lists_[b].insert(std::lower_bound(lists_[b].begin(), lists_[b].end(), a), a);
  ++edges_;
}

std::vector<std::pair<int, int>> ConflictGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int a = 0; a < n_; ++a)
    for (int b : lists_[a])
      if (b > a) out.emplace_back(a, b);
  return out;
}

ConflictGraph ConflictGraph::complement() const {
  ConflictGraph g(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!adjacent(a, b)) g.add_edge(a, b);
  return g;
}

Instance::Instance(int machines, std::vector<Time> proc, ConflictGraph conflicts, std::string id)
    : machines_(machines), proc_(std::move(proc)), conflicts_(std::move(conflicts)), id_(std::move(id)) {
  if (proc_.empty()) throw ValidationError("instance must contain at least one job");
  if (machines_ < 1) throw ValidationError("machine count must be at least 1");
  for (std::size_t j = 0; j < proc_.size(); ++j) {
    if (proc_[j] < 0) throw ValidationError("negative processing time for job " + std::to_string(j + 1));
  }
  if (conflicts_.size() != n()) {
    throw ValidationError("conflict graph has " + std::to_string(conflicts_.size()) + " vertices, expected " +
                          std::to_string(n()));
  }
}

Time Instance::total_processing() const noexcept { return std::accumulate(proc_.begin(), proc_.end(), Time{0}); }

Time Instance::max_processing() const noexcept { return *std::max_element(proc_.begin(), proc_.end()); }

double Instance::edge_density() const noexcept {
  if (n() < 2) return 0.0;
  const double pairs = 0.5 * n() * (n() - 1);
  return static_cast<double>(conflicts_.edge_count()) / pairs;
}

bool is_permutation(std::span<const JobId> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (JobId j : perm) {
    if (j < 0 || j >= n || seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

std::vector<JobId> identity_permutation(int n) {
  std::vector<JobId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

namespace {

void check_dimensions(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.machine_of.size()) != inst.n() || static_cast<int>(sched.start_of.size()) != inst.n()) {
    throw StructuralError("schedule covers " + std::to_string(sched.start_of.size()) + " jobs, instance has " +
                          std::to_string(inst.n()));
  }
  for (int j = 0; j < inst.n(); ++j) {
    if (sched.machine_of[j] < 0 || sched.machine_of[j] >= inst.m()) {
      throw StructuralError("job " + std::to_string(j + 1) + " assigned to machine " +
                            std::to_string(sched.machine_of[j] + 1) + " of " + std::to_string(inst.m()));
    }
  }
}

}  // namespace

bool check_feasible(const Instance& inst, const Schedule& sched) {
  check_dimensions(inst, sched);
  const int n = inst.n();
  for (int j = 0; j < n; ++j)
    if (sched.start_of[j] < 0) return false;
  for (int j = 0; j < n; ++j) {
    if (inst.p(j) == 0) continue;
    const Time sj = sched.start_of[j];
    const Time cj = sj + inst.p(j);
    for (int k = j + 1; k < n; ++k) {
      if (inst.p(k) == 0) continue;
      const Time sk = sched.start_of[k];
      const bool overlap = sj < sk + inst.p(k) && sk < cj;
      if (!overlap) continue;
      if (sched.machine_of[j] == sched.machine_of[k] || inst.conflict(j, k)) return false;
    }
  }
  return true;
}

Time total_flow_time(const Instance& inst, const Schedule& sched) {
  if (sched.size() != inst.n()) {
    throw StructuralError("schedule covers " + std::to_string(sched.size()) + " jobs, instance has " +
                          std::to_string(inst.n()));
  }
  Time total = 0;
  for (int j = 0; j < inst.n(); ++j) total += sched.start_of[j] + inst.p(j);
  return total;
}

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParameterError("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Fraction{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::string Fraction::percent(int decimals) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, 100.0 * value());
  return buf;
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

MetricReport metrics(Time best_lb, Time best_ub, Time value) {
  if (best_lb < 0 || best_ub < 0 || value < 0) throw ParameterError("metrics require non-negative values");
  if (best_lb > best_ub) {
    throw ParameterError("best lower bound " + std::to_string(best_lb) + " exceeds best upper bound " +
                         std::to_string(best_ub));
  }
  MetricReport r;
  r.best_lb = best_lb;
  r.best_ub = best_ub;
  r.value = value;
  if (best_lb > 0) r.deviation_from_lb = Fraction::make(value - best_lb, best_lb);
  if (best_ub > 0) r.gap = Fraction::make(best_ub - best_lb, best_ub);
  return r;
}

}  // namespace confsched

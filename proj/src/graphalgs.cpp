#include "confsched/graphalgs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "confsched/error.hpp"

namespace confsched {

WeightedGraph::WeightedGraph(ConflictGraph g, std::vector<Time> w) : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.size()) throw StructuralError("one weight per vertex required");
  for (Time x : weights)
    if (x < 0) throw ValidationError("vertex weights must be non-negative");
}

WeightedGraph agreement_graph(const Instance& inst) { return WeightedGraph(inst.conflicts().complement(), inst.proc()); }

namespace {

class Blossom {
 public:
  explicit Blossom(const ConflictGraph& g)
      : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching solve() {
    // Greedy start; augmenting paths finish the job.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u : g_.neighbors(v)) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    Matching out;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    return out;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const ConflictGraph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

constexpr int kBruteLimit = 24;

}  // namespace

Matching max_matching(const ConflictGraph& g) { return Blossom(g).solve(); }

int brute_matching_size(const ConflictGraph& g) {
  const int n = g.size();
  if (n > kBruteLimit) throw GuardError("exhaustive matching supports at most 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= 1u << u;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::int8_t> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int value = best[rest];
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      value = std::max(value, 1 + best[rest & ~(1u << u)]);
    }
    best[mask] = static_cast<std::int8_t>(value);
  }
  return best[full];
}

std::string_view to_string(WisRule rule) {
  switch (rule) {
    case WisRule::Gwmin: return "GWMIN";
    case WisRule::Gwmin2: return "GWMIN2";
    case WisRule::Gwmax: return "GWMAX";
  }
  return "?";
}

namespace {

// num / den with den > 0.
struct Ratio {
  std::int64_t num;
  std::int64_t den;
  bool operator<(const Ratio& o) const { return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den; }
};

}  // namespace

std::vector<int> greedy_wis(const WeightedGraph& wg, WisRule rule) {
  const ConflictGraph& g = wg.graph;
  const int n = g.size();
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  auto remove = [&](int v) {
    alive[v] = 0;
    for (int u : g.neighbors(v))
      if (alive[u]) --degree[u];
  };

  std::vector<int> chosen;
  if (rule == WisRule::Gwmax) {
    for (;;) {
      int pick = -1;
      Ratio best{0, 1};
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || degree[v] == 0) continue;
        const Ratio r{wg.weights[v], static_cast<std::int64_t>(degree[v]) * (degree[v] + 1)};
        if (pick == -1 || r < best) {
          pick = v;
          best = r;
        }
      }
      if (pick == -1) break;
      remove(pick);
    }
    for (int v = 0; v < n; ++v)
      if (alive[v]) chosen.push_back(v);
    return chosen;
  }

  for (;;) {
    int pick = -1;
    Ratio best{0, 1};
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      Ratio r{wg.weights[v], degree[v] + 1};
      if (rule == WisRule::Gwmin2) {
        std::int64_t closed = wg.weights[v];
        for (int u : g.neighbors(v))
          if (alive[u]) closed += wg.weights[u];
        r = closed > 0 ? Ratio{wg.weights[v], closed} : Ratio{0, 1};
      }
      if (pick == -1 || best < r) {
        pick = v;
        best = r;
      }
    }
    if (pick == -1) break;
    chosen.push_back(pick);
    std::vector<int> drop{pick};
    for (int u : g.neighbors(pick))
      if (alive[u]) drop.push_back(u);
    for (int v : drop) remove(v);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

struct MwisSearch {
  std::vector<std::uint32_t> closed_nbr;
  const std::vector<Time>& w;
  Time best = -1;
  std::uint32_t best_set = 0;

  void run(std::uint32_t candidates, std::uint32_t chosen, Time value) {
    if (candidates == 0) {
      if (value > best) {
        best = value;
        best_set = chosen;
      }
      return;
    }
    Time optimistic = value;
    for (std::uint32_t c = candidates; c; c &= c - 1) optimistic += w[std::countr_zero(c)];
    if (optimistic <= best) return;
    const int v = std::countr_zero(candidates);
    run(candidates & ~closed_nbr[v], chosen | (1u << v), value + w[v]);
    run(candidates & ~(1u << v), chosen, value);
  }
};

}  // namespace

std::vector<int> brute_mwis(const WeightedGraph& g) {
  const int n = g.size();
  if (n > kBruteLimit) throw GuardError("exhaustive independent set supports at most 24 vertices, got " + std::to_string(n));
  MwisSearch search{std::vector<std::uint32_t>(n), g.weights};
  for (int v = 0; v < n; ++v) {
    search.closed_nbr[v] = 1u << v;
    for (int u : g.graph.neighbors(v)) search.closed_nbr[v] |= 1u << u;
  }
  const std::uint32_t all = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1);
  search.run(all, 0, 0);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (search.best_set >> v & 1u) out.push_back(v);
  return out;
}

Time set_weight(const WeightedGraph& g, const std::vector<int>& set) {
  Time total = 0;
  for (int v : set) total += g.weights[v];
  return total;
}

bool is_independent(const ConflictGraph& g, const std::vector<int>& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b] || g.adjacent(set[a], set[b])) return false;
  return true;
}

}  // namespace confsched

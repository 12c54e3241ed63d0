#pragma once

// Agreement graph, maximum-cardinality matching and greedy weighted
// independent sets, with exhaustive oracles for both.

#include <string_view>
#include <utility>
#include <vector>

#include "confsched/core.hpp"

namespace confsched {

/// Vertex-weighted simple graph.
struct WeightedGraph {
  ConflictGraph graph;
  std::vector<Time> weights;

  WeightedGraph() = default;
  WeightedGraph(ConflictGraph g, std::vector<Time> w);

  int size() const noexcept { return graph.size(); }
};

/// Complement of the conflict graph, weighted by processing times.
WeightedGraph agreement_graph(const Instance& inst);

using Matching = std::vector<std::pair<int, int>>;

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm). Pairs are returned as (u, v) with u < v, sorted.
Matching max_matching(const ConflictGraph& g);
inline Matching max_matching(const WeightedGraph& g) { return max_matching(g.graph); }

/// Exhaustive matching size by bitmask dynamic programming; at most 24
/// vertices (GuardError otherwise).
int brute_matching_size(const ConflictGraph& g);

enum class WisRule { Gwmin, Gwmin2, Gwmax };

std::string_view to_string(WisRule rule);

/// Greedy independent set (vertex indices ascending).
///   Gwmin   pick v maximising w(v) / (deg(v) + 1), drop N[v]
///   Gwmin2  pick v maximising w(v) / sum of w over N[v], drop N[v]
///   Gwmax   delete v with deg(v) >= 1 minimising w(v) / (deg(v) (deg(v) + 1))
///           until no edge is left; the survivors form the set
/// Degrees are taken in the current remaining graph; ties go to the
/// lowest index. Ratios are compared exactly.
std::vector<int> greedy_wis(const WeightedGraph& g, WisRule rule);

/// Exact maximum-weight independent set for at most 24 vertices.
std::vector<int> brute_mwis(const WeightedGraph& g);

Time set_weight(const WeightedGraph& g, const std::vector<int>& set);
bool is_independent(const ConflictGraph& g, const std::vector<int>& set);

}  // namespace confsched

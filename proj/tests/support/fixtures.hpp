#pragma once

#include <utility>
#include <vector>

#include "confsched/core.hpp"

namespace fixtures {

using confsched::ConflictGraph;
using confsched::Instance;

// Three jobs, two machines, jobs 0 and 1 conflict.
inline Instance e1() {
  std::vector<std::pair<int, int>> edges{{0, 1}};
  return Instance(2, {2, 1, 3}, ConflictGraph::from_edges(3, edges), "E1");
}

// Four unit jobs on two machines, conflicts {0,1} and {2,3}.
inline Instance u1() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}};
  return Instance(2, {1, 1, 1, 1}, ConflictGraph::from_edges(4, edges), "U1");
}

inline Instance with_edges(int m, std::vector<confsched::Time> p, std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(p.size());
  return Instance(m, std::move(p), ConflictGraph::from_edges(n, edges));
}

}  // namespace fixtures

#include <doctest.h>

#include <set>

#include "confsched/error.hpp"
#include "confsched/graphalgs.hpp"
#include "confsched/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace confsched;

static bool valid_matching(const ConflictGraph& g, const Matching& mt) {
  std::set<int> used;
  for (auto [u, v] : mt) {
    if (u >= v || !g.adjacent(u, v)) return false;
    if (!used.insert(u).second || !used.insert(v).second) return false;
  }
  return true;
}

TEST_CASE("agreement graph") {
  const auto a = agreement_graph(fixtures::e1());
  CHECK(a.graph.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(a.weights == std::vector<Time>{2, 1, 3});
}

TEST_CASE("matching on small shapes") {
  // Odd cycle plus a pendant: the blossom has to be contracted.
  const auto c5 = ConflictGraph::from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  const auto mt = max_matching(c5);
  CHECK(mt.size() == 3);
  CHECK(valid_matching(c5, mt));
  CHECK(max_matching(ConflictGraph(4)).empty());
  CHECK(max_matching(ConflictGraph::complete(7)).size() == 3);
  // Petersen graph has a perfect matching.
  std::vector<std::pair<int, int>> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(max_matching(ConflictGraph::from_edges(10, pe)).size() == 5);
}

TEST_CASE("matching equals exhaustive search") {
  Rng rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 12));
    const Instance inst = oracle::random_instance(rng, n, 2, rng.uniform01());
    const auto& g = inst.conflicts();
    const auto mt = max_matching(g);
    CHECK(valid_matching(g, mt));
    const int want = oracle::brute_matching(g);
    CHECK(static_cast<int>(mt.size()) == want);
    CHECK(brute_matching_size(g) == want);
  }
  CHECK_THROWS_AS(brute_matching_size(ConflictGraph(25)), GuardError);
}

TEST_CASE("greedy rules on a path") {
  // Path 0-1-2 with weights 1, 3, 1.
  const WeightedGraph g(ConflictGraph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}), {1, 3, 1});
  // GWMIN: ratios 1/2, 3/3, 1/2 take vertex 1.
  CHECK(greedy_wis(g, WisRule::Gwmin) == std::vector<int>{1});
  // GWMIN2: ratios 1/4, 3/5, 1/4 take vertex 1.
  CHECK(greedy_wis(g, WisRule::Gwmin2) == std::vector<int>{1});
  // GWMAX: ratios 1/2, 3/6, 1/2 tie; vertex 0 goes first, then 1/2 for vertex 2
  // against 3/2 for vertex 1.
  CHECK(greedy_wis(g, WisRule::Gwmax) == std::vector<int>{1});
  CHECK(brute_mwis(g) == std::vector<int>{1});

  const WeightedGraph h(ConflictGraph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}), {2, 3, 2});
  CHECK(greedy_wis(h, WisRule::Gwmin) == std::vector<int>{0, 2});
  CHECK(brute_mwis(h) == std::vector<int>{0, 2});
  CHECK(set_weight(h, {0, 2}) == 4);
}

TEST_CASE("greedy sets are independent and bounded by the optimum") {
  Rng rng(32);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 14));
    const Instance inst = oracle::random_instance(rng, n, 2, rng.uniform01(), 0, 20);
    const auto g = agreement_graph(inst);
    const auto best = brute_mwis(g);
    CHECK(is_independent(g.graph, best));
    for (WisRule r : {WisRule::Gwmin, WisRule::Gwmin2, WisRule::Gwmax}) {
      const auto s = greedy_wis(g, r);
      CHECK(is_independent(g.graph, s));
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(set_weight(g, s) <= set_weight(g, best));
    }
    // The optimum is also maximal under single additions.
    for (int v = 0; v < n; ++v) {
      if (std::find(best.begin(), best.end(), v) != best.end()) continue;
      auto t = best;
      t.push_back(v);
      if (is_independent(g.graph, t)) CHECK(g.weights[v] == 0);
    }
  }
}

#include <doctest.h>

#include "confsched/error.hpp"
#include "confsched/graphalgs.hpp"
#include "confsched/polycases.hpp"
#include "confsched/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace confsched;

static Instance unit_instance(Rng& rng, int n, int m, double density) {
  return oracle::random_instance(rng, n, m, density, 1, 1);
}

TEST_CASE("structure detection order") {
  CHECK(detect_structure(Instance(2, {1, 2, 3}, ConflictGraph(3))) == Structure::Edgeless);
  CHECK(detect_structure(Instance(2, {1, 1, 1}, ConflictGraph::complete(3))) == Structure::Clique);
  CHECK(detect_structure(fixtures::e1()) == Structure::ComplementOfStar);
  CHECK(*star_complement_center(fixtures::e1()) == 2);
  CHECK(detect_structure(fixtures::u1()) == Structure::TwoMachineUnit);
  CHECK(detect_structure(fixtures::with_edges(3, {1, 1, 1, 1}, {{0, 1}, {2, 3}})) == Structure::General);
  CHECK(detect_structure(fixtures::with_edges(2, {1, 2, 1, 1}, {{0, 1}, {2, 3}})) == Structure::General);
  CHECK(detect_structure(fixtures::with_edges(1, {1, 2, 3}, {{0, 1}})) == Structure::General);
  CHECK_FALSE(star_complement_center(fixtures::u1()).has_value());
  CHECK(to_string(Structure::ComplementOfStar) == "complement-of-star");
}

TEST_CASE("special solvers reach the oracle optimum") {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 6));
    const int m = static_cast<int>(rng.uniform_int(2, 3));
    std::vector<Time> p(n);
    for (auto& v : p) v = rng.uniform_int(1, 7);

    const Instance free(m, p, ConflictGraph(n));
    const auto a = solve_edgeless(free);
    CHECK(check_feasible(free, a.schedule));
    CHECK(a.value == oracle::semi_active_optimum(free));

    const Instance clique(m, p, ConflictGraph::complete(n));
    const auto b = solve_clique(clique);
    CHECK(check_feasible(clique, b.schedule));
    CHECK(b.value == oracle::semi_active_optimum(clique));

    const int center = static_cast<int>(rng.uniform_int(0, n - 1));
    ConflictGraph g(n);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (j != center && k != center) g.add_edge(j, k);
    const Instance star(m, p, g);
    CHECK(*star_complement_center(star) == center);
    const auto c = solve_star_complement(star);
    CHECK(check_feasible(star, c.schedule));
    CHECK(c.value == oracle::semi_active_optimum(star));
  }
  CHECK_THROWS_AS(solve_edgeless(fixtures::e1()), StructureMismatch);
  CHECK_THROWS_AS(solve_clique(fixtures::e1()), StructureMismatch);
  CHECK_THROWS_AS(solve_star_complement(fixtures::u1()), StructureMismatch);
  CHECK_THROWS_AS(solve_p2_unit(fixtures::e1()), StructureMismatch);
}

TEST_CASE("two machines with unit jobs") {
  const auto u = solve_p2_unit(fixtures::u1());
  // Agreement pairs {0,2} and {1,3} run at t = 0 and t = 1.
  CHECK(u.value == 6);
  CHECK(p2_unit_closed_form(4, 2) == 6);
  CHECK(p2_unit_closed_form(3, 0) == 6);
  CHECK(p2_unit_closed_form(5, 1) == 11);

  Rng rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 7));
    const Instance inst = unit_instance(rng, n, 2, rng.uniform01());
    const auto r = solve_p2_unit(inst);
    CHECK(check_feasible(inst, r.schedule));
    const int mm = oracle::brute_matching(inst.conflicts().complement());
    CHECK(r.value == p2_unit_closed_form(n, mm));
    CHECK(r.value == oracle::semi_active_optimum(inst));
  }
}

TEST_CASE("routing") {
  Structure s{};
  CHECK(route_exact(fixtures::e1(), &s)->value == 7);
  CHECK(s == Structure::ComplementOfStar);
  CHECK_FALSE(route_exact(fixtures::with_edges(2, {1, 2, 1, 1}, {{0, 1}, {2, 3}}), &s).has_value());
  CHECK(s == Structure::General);

  // Three machines, unit jobs, bipartite agreement graph.
  Rng rng(53);
  int covered = 0;
  for (int trial = 0; trial < 300 && covered < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 7));
    const Instance inst = unit_instance(rng, n, 3, 0.7);
    const auto r = route_exact(inst, &s);
    if (!r) continue;
    ++covered;
    CHECK(check_feasible(inst, r->schedule));
    CHECK(r->value == oracle::semi_active_optimum(inst));
  }
  CHECK(covered >= 20);
}

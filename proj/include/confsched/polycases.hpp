#pragma once

// Exact polynomial solvers for special conflict structures.
//
// detect_structure returns the first label that applies, in the order
//   Edgeless, Clique, ComplementOfStar, TwoMachineUnit, General.
// Three machines with unit jobs and a co-bipartite conflict graph
// (bipartite agreement graph) behave like two machines, because no three
// jobs can run together; route_exact maps that case onto solve_p2_unit.

#include <optional>
#include <string_view>

#include "confsched/core.hpp"

namespace confsched {

enum class Structure { Edgeless, Clique, ComplementOfStar, TwoMachineUnit, General };

std::string_view to_string(Structure s);

Structure detect_structure(const Instance& inst);

/// Center of a complement-of-star conflict graph (the single job in
/// agreement with every other job while the rest form a conflict clique),
/// or nullopt. Needs n >= 3.
std::optional<JobId> star_complement_center(const Instance& inst);

struct SolveResult {
  Schedule schedule;
  Time value = 0;
};

/// SPT list schedule; the job at ascending position k goes to machine k mod m.
SolveResult solve_edgeless(const Instance& inst);
/// All jobs one after another in SPT order on machine 0.
SolveResult solve_clique(const Instance& inst);
/// Center at t = 0 on machine 0, the other jobs back-to-back in SPT order
/// on machine 1 from t = 0.
SolveResult solve_star_complement(const Instance& inst);
/// Two machines, unit jobs: matched agreement pairs run together at
/// times 0..|M|-1, the rest follow one by one. The value is checked
/// against |M|(|M| - n) + n(n + 1)/2 on every call.
SolveResult solve_p2_unit(const Instance& inst);

/// |M|(|M| - n) + n(n + 1)/2.
Time p2_unit_closed_form(int n, int matching_size);

/// Runs the matching solver when the instance has a structure it covers
/// (including the three-machine co-bipartite unit case); nullopt for General.
std::optional<SolveResult> route_exact(const Instance& inst, Structure* detected = nullptr);

}  // namespace confsched

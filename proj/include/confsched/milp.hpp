#pragma once

// MILP formulations as plain data, LP-file export and re-import, schedule
// substitution, warm starts and ingestion of external solver results.
//
// Naming (jobs 1-based, J0 = 0 is the dummy job, machines 1-based):
//   F1  x_i_j_t  job j starts on machine i at t
//   F2  xp_j_k_t k directly follows j on a machine and starts at t
//   F3  x_j_k    k directly follows j on a machine
//   F2, F3  y_j_k (j < k in conflict) j runs before k;  F3  C_j completion
//
// F2 sequencing is written as
//   sum_j xp_j_k_t <= sum_j sum_{t' >= t + p_k} xp_k_j_t'   (k in J, every t)
//   sum_j sum_t xp_k_j_t = 1                                 (k in J)
// so that the successor of k starts after k completes. Arcs into J0 carry
// the time the chain ends.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "confsched/core.hpp"

namespace confsched {

enum class Formulation { F1 = 1, F2 = 2, F3 = 3 };
std::string_view to_string(Formulation f);
Formulation parse_formulation(std::string_view name);

enum class VarKind { Binary, Continuous };
enum class Sense { LessEqual, Equal, GreaterEqual };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Binary;
  double lower = 0.0;
  std::optional<double> upper;  ///< none: +infinity (continuous only)
};

struct Term {
  int var = 0;
  std::int64_t coef = 0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  std::int64_t rhs = 0;
};

struct MilpModel {
  Formulation formulation = Formulation::F1;
  Time horizon = 0;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Term> objective;

  int add_variable(std::string name, VarKind kind, double lower = 0.0, std::optional<double> upper = std::nullopt);
  /// Empty rows are dropped; returns false in that case.
  bool add_constraint(Constraint c);
  std::optional<int> find(std::string_view name) const;
  std::size_t count(VarKind kind) const;

 private:
  std::unordered_map<std::string, int> index_;
};

/// Smallest horizon accepted by build_model: max(max p_j, ceil(sum p / m)).
Time minimum_horizon(const Instance& inst);

/// Default horizon is sum p_j. Throws ParameterError below minimum_horizon.
MilpModel build_model(const Instance& inst, Formulation f, std::optional<Time> horizon = std::nullopt);

/// Index-set sizes of build_model's output for instances whose conflict
/// pairs all contain a job with p > 0.
struct ModelCounts {
  std::size_t binaries = 0;
  std::size_t continuous = 0;
  std::size_t constraints = 0;
};
ModelCounts expected_counts(const Instance& inst, Formulation f, Time horizon);

void write_lp(const MilpModel& model, std::ostream& out);
std::string format_lp(const MilpModel& model);
void export_lp(const MilpModel& model, const std::string& path);

/// Reader for the dialect written by write_lp (Minimize, Subject To,
/// Bounds, Binaries/Generals, End; backslash comments; wrapped lines).
/// Throws ParseError.
struct LpFile {
  std::vector<std::pair<std::string, double>> objective;
  struct Row {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
  };
  std::vector<Row> rows;
  std::map<std::string, double> lower_bounds;
  std::vector<std::string> binaries;
  std::vector<std::string> variables;  ///< every name, in first-seen order
};
LpFile parse_lp(std::istream& in);
LpFile read_lp(const std::string& path);

using Assignment = std::map<std::string, double>;

struct AssignmentCheck {
  bool feasible = false;
  double objective = 0.0;
  /// First failing item (constraint, bound, integrality or unknown name).
  std::string violation;
};

/// Substitutes `values` (absent names are 0) and checks every constraint,
/// bound and integrality requirement with tolerance 1e-6.
AssignmentCheck check_assignment(const MilpModel& model, const Assignment& values);

/// Translates a feasible schedule into the model's variables. Jobs sharing
/// a machine are chained in order of (start, completion, index).
Assignment schedule_assignment(const Instance& inst, const MilpModel& model, const Schedule& sched);

struct WarmStart {
  Schedule schedule;
  Time value = 0;
  Assignment values;
};

/// ECTF decode of the identity permutation, translated for `model`.
WarmStart warm_start(const Instance& inst, const MilpModel& model);
/// `name value` lines: nonzero x variables, every y and every C.
void write_start(const MilpModel& model, const WarmStart& ws, std::ostream& out);
Assignment parse_start(std::istream& in);

struct SolverResult {
  std::string status;
  std::optional<double> objective;
  std::optional<double> bound;

  bool bound_absent() const noexcept { return !bound.has_value(); }
};

/// Whitespace-separated key=value tokens (status, objective, bound; other
/// keys ignored; # starts a comment). Throws ParseError when a token is
/// not key=value, a number does not parse or status is missing.
SolverResult parse_solver_result(std::istream& in);
SolverResult ingest_solver_result(const std::string& path);

}  // namespace confsched

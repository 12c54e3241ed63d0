#pragma once

// Command-line front end, callable in-process. Exit codes: 0 success,
// 1 runtime or data error, 2 usage error.
//
//   gen     write generated instances and print a manifest
//   solve   special-case router, then GA / GA-ls; one result record
//   bounds  LB1..LB4 (+ ingested solver bounds) with timings
//   exact   exhaustive oracle value
//   export  LP model and warm-start files
//   bench   per-instance CSV over a directory plus grouped summaries

#include <iosfwd>
#include <string>
#include <vector>

namespace confsched {

inline constexpr const char* kResultFormat = "confsched-result v1";

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace confsched

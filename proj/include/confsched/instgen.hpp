#pragma once

// Benchmark instance generation and the plain-text instance format.
//
// File format (1-based jobs):
//   # optional comment lines; "# id <label>" sets the instance label
//   n m
//   p_1 p_2 ... p_n
//   j k          one conflict edge per line
// Paths ending in ".gz" are read and written gzip-compressed.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "confsched/core.hpp"

namespace confsched {

class Rng;

struct GenSpec {
  int n = 20;
  int m = 3;
  int class_id = 1;  ///< 1..6, selects the processing-time range
  double density = 0.5;
  std::uint64_t seed = 0;
};

struct ProcRange {
  Time lo;
  Time hi;
};

/// Closed processing-time range of a class; ParameterError outside 1..6.
/// Classes 4 and 5 share [90, 100].
ProcRange class_range(int class_id);

std::vector<Time> sample_processing_times(int n, int class_id, Rng& rng);
/// G(n, p): pairs (j, k), j < k, visited row-major, one uniform01 draw each.
ConflictGraph sample_conflict_graph(int n, double density, Rng& rng);

/// One stream seeded with spec.seed: processing times first, then edges.
Instance generate(const GenSpec& spec, std::string id = {});

/// One cell of the benchmark grid. The 20 base instances of an (n, m,
/// class) triple own their processing times; each density carries
/// `graphs` conflict graphs drawn on top of the same times.
struct GridCell {
  int n;
  int m;
  int class_id;
  int instance;  ///< 0-based base instance index
  double density;
  int graph;  ///< 0-based conflict graph index
};

struct GridOptions {
  std::vector<int> sizes{20, 50, 100, 150};
  std::vector<int> machines{3, 5, 8, 10, 12};
  std::vector<int> classes{1, 2, 3, 4, 5, 6};
  int instances_per_class = 20;
  std::vector<double> densities{0.2, 0.5, 0.8};
  int graphs_per_density = 5;
};

std::vector<GridCell> enumerate_grid(const GridOptions& options);
/// Seeds derived as mix(master, n, m, class, instance) for processing
/// times and additionally (density in thousandths, graph) for edges.
Instance generate_cell(const GridCell& cell, std::uint64_t master_seed);
std::string cell_label(const GridCell& cell);

void write_instance(const Instance& inst, std::ostream& out);
void write_instance(const Instance& inst, const std::filesystem::path& path);
Instance read_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);
std::string format_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

}  // namespace confsched

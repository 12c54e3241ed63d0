#include "confsched/instgen.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "confsched/error.hpp"
#include "confsched/rng.hpp"

namespace confsched {

ProcRange class_range(int class_id) {
  switch (class_id) {
    case 1: return {1, 10};
    case 2: return {1, 100};
    case 3: return {10, 20};
    case 4:
    case 5: return {90, 100};
    case 6: return {10, 100};
    default: throw ParameterError("class id must be in 1..6, got " + std::to_string(class_id));
  }
}

std::vector<Time> sample_processing_times(int n, int class_id, Rng& rng) {
  const ProcRange range = class_range(class_id);
  std::vector<Time> proc(n);
  for (auto& p : proc) p = rng.uniform_int(range.lo, range.hi);
  return proc;
}

ConflictGraph sample_conflict_graph(int n, double density, Rng& rng) {
  if (!(density >= 0.0 && density <= 1.0)) throw ParameterError("density must lie in [0, 1]");
  ConflictGraph g(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (rng.uniform01() < density) g.add_edge(j, k);
  return g;
}

namespace {

void check_spec(int n, int m) {
  if (n < 1) throw ParameterError("job count must be at least 1");
  if (m < 1) throw ParameterError("machine count must be at least 1");
}

}  // namespace

Instance generate(const GenSpec& spec, std::string id) {
  check_spec(spec.n, spec.m);
  class_range(spec.class_id);
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw ParameterError("density must lie in [0, 1]");
  Rng rng(spec.seed);
  auto proc = sample_processing_times(spec.n, spec.class_id, rng);
  auto graph = sample_conflict_graph(spec.n, spec.density, rng);
  return Instance(spec.m, std::move(proc), std::move(graph), std::move(id));
}

std::vector<GridCell> enumerate_grid(const GridOptions& options) {
  std::vector<GridCell> cells;
  for (int n : options.sizes)
    for (int m : options.machines)
      for (int c : options.classes)
        for (int i = 0; i < options.instances_per_class; ++i)
          for (double d : options.densities)
            for (int g = 0; g < options.graphs_per_density; ++g) cells.push_back({n, m, c, i, d, g});
  return cells;
}

namespace {

std::uint64_t density_key(double density) { return static_cast<std::uint64_t>(density * 1000.0 + 0.5); }

}  // namespace

Instance generate_cell(const GridCell& cell, std::uint64_t master_seed) {
  check_spec(cell.n, cell.m);
  std::uint64_t proc_seed = master_seed;
  for (std::uint64_t v : {std::uint64_t(cell.n), std::uint64_t(cell.m), std::uint64_t(cell.class_id),
                          std::uint64_t(cell.instance)})
    proc_seed = combine_seed(proc_seed, v);
  std::uint64_t graph_seed = combine_seed(combine_seed(proc_seed, density_key(cell.density)), std::uint64_t(cell.graph));
  Rng proc_rng(proc_seed);
  Rng graph_rng(graph_seed);
  auto proc = sample_processing_times(cell.n, cell.class_id, proc_rng);
  auto graph = sample_conflict_graph(cell.n, cell.density, graph_rng);
  return Instance(cell.m, std::move(proc), std::move(graph), cell_label(cell));
}

std::string cell_label(const GridCell& cell) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "n%d_m%d_c%d_i%02d_p%.2f_g%d", cell.n, cell.m, cell.class_id, cell.instance + 1,
                cell.density, cell.graph + 1);
  return buf;
}

void write_instance(const Instance& inst, std::ostream& out) {
  if (!inst.id().empty()) out << "# id " << inst.id() << '\n';
  out << inst.n() << ' ' << inst.m() << '\n';
  for (int j = 0; j < inst.n(); ++j) out << (j ? " " : "") << inst.p(j);
  out << '\n';
  for (auto [a, b] : inst.conflicts().edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  write_instance(inst, os);
  return os.str();
}

namespace {

bool has_gz_suffix(const std::filesystem::path& path) { return path.extension() == ".gz"; }

std::string read_file(const std::filesystem::path& path) {
  if (has_gz_suffix(path)) {
    gzFile f = gzopen(path.string().c_str(), "rb");
    if (!f) throw Error("cannot open " + path.string());
    std::string data;
    char buf[1 << 14];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) data.append(buf, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(f);
    if (failed) throw Error("cannot decompress " + path.string());
    return data;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  if (has_gz_suffix(path)) {
    gzFile f = gzopen(path.string().c_str(), "wb");
    if (!f) throw Error("cannot write " + path.string());
    const int wrote = data.empty() ? 0 : gzwrite(f, data.data(), static_cast<unsigned>(data.size()));
    gzclose(f);
    if (wrote != static_cast<int>(data.size())) throw Error("cannot compress " + path.string());
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << data;
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, int line, const char* field) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + field + " '" + std::string(token) + "'", line);
  }
  return v;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::string id;
  int stage = 0;  // 0: header, 1: processing times, 2: edges
  int n = 0, m = 0;
  std::vector<Time> proc;
  ConflictGraph graph;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.front() == '#') {
      auto tokens = split_ws(line.substr(1));
      if (stage == 0 && tokens.size() >= 2 && tokens[0] == "id") {
        const auto from = tokens[1].data() - line.data();
        const auto to = tokens.back().data() + tokens.back().size() - line.data();
        id = std::string(line.substr(from, to - from));
      }
      continue;
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (stage == 0) {
      if (tokens.size() != 2) throw ParseError("expected header 'n m'", line_no);
      const auto nn = parse_int(tokens[0], line_no, "job count");
      const auto mm = parse_int(tokens[1], line_no, "machine count");
      if (nn < 1) throw ValidationError("line " + std::to_string(line_no) + ": job count must be at least 1");
      if (mm < 1) throw ValidationError("line " + std::to_string(line_no) + ": machine count must be at least 1");
      if (nn > 100000) throw ParseError("job count too large", line_no);
      n = static_cast<int>(nn);
      m = static_cast<int>(mm);
      graph = ConflictGraph(n);
      stage = 1;
    } else if (stage == 1) {
      if (static_cast<int>(tokens.size()) != n) {
        throw ParseError("expected " + std::to_string(n) + " processing times, found " + std::to_string(tokens.size()),
                         line_no);
      }
      for (auto t : tokens) {
        const auto p = parse_int(t, line_no, "processing time");
        if (p < 0) throw ValidationError("line " + std::to_string(line_no) + ": negative processing time");
        proc.push_back(p);
      }
      stage = 2;
    } else {
      if (tokens.size() != 2) throw ParseError("expected edge 'j k'", line_no);
      const auto a = parse_int(tokens[0], line_no, "edge endpoint");
      const auto b = parse_int(tokens[1], line_no, "edge endpoint");
      const std::string where = "line " + std::to_string(line_no) + ": ";
      if (a < 1 || b < 1 || a > n || b > n) throw ValidationError(where + "edge endpoint out of range 1.." + std::to_string(n));
      if (a == b) throw ValidationError(where + "self-loop on job " + std::to_string(a));
      if (graph.adjacent(static_cast<int>(a - 1), static_cast<int>(b - 1))) {
        throw ValidationError(where + "edge {" + std::to_string(a) + ", " + std::to_string(b) + "} listed twice");
      }
      graph.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  if (stage == 0) throw ParseError("missing header 'n m'", line_no);
  if (stage == 1) throw ParseError("missing processing times", line_no);
  return Instance(m, std::move(proc), std::move(graph), std::move(id));
}

Instance read_instance(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return parse_instance(os.str());
}

Instance read_instance(const std::filesystem::path& path) {
  Instance inst = parse_instance(read_file(path));
  return inst;
}

void write_instance(const Instance& inst, const std::filesystem::path& path) { write_file(path, format_instance(inst)); }

}  // namespace confsched

#include "confsched/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "confsched/bounds.hpp"
#include "confsched/error.hpp"
#include "confsched/exact.hpp"
#include "confsched/ga.hpp"
#include "confsched/instgen.hpp"
#include "confsched/milp.hpp"
#include "confsched/polycases.hpp"
#include "confsched/rng.hpp"

namespace confsched {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string label_of(const Instance& inst, const std::string& path) {
  return inst.id().empty() ? fs::path(path).filename().string() : inst.id();
}

// Density and class read back from generator labels, if present.
struct LabelInfo {
  std::optional<double> density;
  std::optional<int> class_id;
};

LabelInfo parse_label(const std::string& id) {
  static const std::regex density_re(R"((?:^|_)p([0-9]*\.?[0-9]+)(?:_|$))");
  static const std::regex class_re(R"((?:^|_)c([0-9]+)(?:_|$))");
  LabelInfo info;
  std::smatch m;
  if (std::regex_search(id, m, density_re)) info.density = std::stod(m[1].str());
  if (std::regex_search(id, m, class_re)) info.class_id = std::stoi(m[1].str());
  return info;
}

double nominal_density(const Instance& inst) {
  return parse_label(inst.id()).density.value_or(inst.edge_density());
}

// Preset plus explicit overrides shared by solve and bench.
struct GaFlags {
  std::string preset = "paper";
  std::optional<double> density;
  std::optional<int> pop_size;
  std::optional<double> mutation_prob;
  std::optional<std::int64_t> max_iters;
  std::optional<std::int64_t> max_no_improve;
  std::optional<int> max_dup_tries;
  std::optional<std::string> decoder;
  std::optional<std::string> crossover;
  std::optional<std::string> mutation;
  std::optional<std::string> seeding;
  std::optional<int> ls_iters;

  void attach(CLI::App& app) {
    app.add_option("--preset", preset, "paper, paper-ls or tuning")
        ->check(CLI::IsMember({"paper", "paper-ls", "tuning"}))
        ->capture_default_str();
    app.add_option("--density", density, "density used to pick the preset population size");
    app.add_option("--pop-size", pop_size, "N_p");
    app.add_option("--pm", mutation_prob, "mutation probability p_m");
    app.add_option("--max-iters", max_iters, "I_max (default 100 * N_p * n)");
    app.add_option("--max-no-improve", max_no_improve, "I_noimp");
    app.add_option("--max-dup-tries", max_dup_tries, "T_max");
    app.add_option("--decoder", decoder, "FIFO, GT, ECTF or ND");
    app.add_option("--crossover", crossover, "X1, OX or LOX");
    app.add_option("--mutation", mutation, "swap or move");
    app.add_option("--seeding", seeding, "random or hybrid");
    app.add_option("--ls-iters", ls_iters, "local search iterations per final member (0 disables)");
  }

  GaConfig build(const Instance& inst, std::uint64_t seed) const {
    const double d = density.value_or(nominal_density(inst));
    GaConfig cfg = preset == "tuning"     ? GaConfig::tuning_baseline()
                   : preset == "paper-ls" ? GaConfig::paper_ls_preset(inst.n(), d)
                                          : GaConfig::paper_preset(d);
    if (pop_size) cfg.pop_size = *pop_size;
    if (mutation_prob) cfg.mutation_prob = *mutation_prob;
    if (max_iters) cfg.max_iters = *max_iters;
    if (max_no_improve) cfg.max_no_improve = *max_no_improve;
    if (max_dup_tries) cfg.max_dup_tries = *max_dup_tries;
    if (decoder) cfg.decoder = parse_decoder(*decoder);
    if (crossover) cfg.crossover = parse_crossover(*crossover);
    if (mutation) cfg.mutation = parse_mutation(*mutation);
    if (seeding) cfg.seeding = parse_seeding(*seeding);
    if (ls_iters) cfg.ls_iters = *ls_iters;
    cfg.rng_seed = seed;
    cfg.validate();
    return cfg;
  }
};

std::string deviation_str(const MetricReport& r) {
  return r.deviation_from_lb ? r.deviation_from_lb->percent() : "NA";
}

std::string gap_str(const MetricReport& r) { return r.gap ? r.gap->percent() : "NA"; }

// ---------------------------------------------------------------- gen

struct GenArgs {
  int n = 20;
  int m = 3;
  int class_id = 1;
  double density = 0.5;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir = ".";
  std::string grid;
  std::vector<double> densities;
  std::vector<int> sizes;
  std::vector<int> machines;
  std::vector<int> classes;
  int graphs = 5;
  int instances = 20;
  bool gz = false;
};

int cmd_gen(const GenArgs& a, bool n_given, std::ostream& out) {
  fs::create_directories(a.out_dir);
  const std::string ext = a.gz ? ".txt.gz" : ".txt";
  out << "# manifest seed=" << a.seed << '\n' << "file,id,n,m,class,density\n";
  auto emit = [&](const Instance& inst, int class_id, double density) {
    const fs::path file = fs::path(a.out_dir) / (inst.id() + ext);
    write_instance(inst, file);
    out << csv_field(file.string()) << ',' << inst.id() << ',' << inst.n() << ',' << inst.m() << ',' << class_id << ','
        << fixed(density, 2) << '\n';
  };
  if (!a.grid.empty()) {
    GridOptions opt;
    if (n_given) opt.sizes = {a.n};
    if (!a.sizes.empty()) opt.sizes = a.sizes;
    if (!a.machines.empty()) opt.machines = a.machines;
    if (!a.classes.empty()) opt.classes = a.classes;
    if (!a.densities.empty()) opt.densities = a.densities;
    opt.graphs_per_density = a.graphs;
    opt.instances_per_class = a.instances;
    for (const GridCell& cell : enumerate_grid(opt)) emit(generate_cell(cell, a.seed), cell.class_id, cell.density);
    return 0;
  }
  for (int k = 0; k < a.count; ++k) {
    GridCell cell{a.n, a.m, a.class_id, k, a.density, 0};
    GenSpec spec{a.n, a.m, a.class_id, a.density, combine_seed(a.seed, static_cast<std::uint64_t>(k))};
    emit(generate(spec, cell_label(cell)), a.class_id, a.density);
  }
  return 0;
}

// ---------------------------------------------------------------- solve

struct SolveRecord {
  std::string id;
  int n = 0, m = 0;
  std::string method;
  Time value = 0;
  Time best_lb = 0;
  std::string lb_source;
  std::string deviation;
  std::string stop;
  std::int64_t generations = 0;
  int pop_size = 0;
  std::string decoder;
  double seconds = 0.0;
};

SolveRecord solve_instance(const Instance& inst, const std::string& id, const GaConfig& cfg, bool route) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveRecord r;
  r.id = id;
  r.n = inst.n();
  r.m = inst.m();
  const BoundReport lb = best_bound(inst);
  r.best_lb = lb.best;
  r.lb_source = lb.best_name();
  Structure s = Structure::General;
  std::optional<SolveResult> special = route ? route_exact(inst, &s) : std::nullopt;
  if (special) {
    r.method = "exact:" + std::string(to_string(s));
    if (s == Structure::General) r.method = "exact:three-machine-unit";
    r.value = special->value;
    r.stop = "exact";
    r.decoder = "NA";
  } else {
    const GaResult g = run_ga(inst, cfg);
    r.method = cfg.ls_iters > 0 ? "ga-ls" : "ga";
    r.value = g.value;
    r.stop = std::string(to_string(g.stats.stop));
    r.generations = g.stats.generations;
    r.pop_size = g.stats.final_pop_size;
    r.decoder = std::string(to_string(g.decoder));
  }
  r.deviation = deviation_str(metrics(r.best_lb, r.value, r.value));
  r.seconds = seconds_since(t0);
  return r;
}

const char* kSolveHeader = "instance,n,m,method,value,best_lb,lb_source,deviation_pct,stop,generations,pop_size,decoder,seconds";

void write_solve_csv(const SolveRecord& r, std::ostream& out) {
  out << csv_field(r.id) << ',' << r.n << ',' << r.m << ',' << r.method << ',' << r.value << ',' << r.best_lb << ','
      << r.lb_source << ',' << r.deviation << ',' << r.stop << ',' << r.generations << ',' << r.pop_size << ','
      << r.decoder << ',' << fixed(r.seconds, 6) << '\n';
}

json solve_json(const SolveRecord& r) {
  return json{{"format", kResultFormat}, {"instance", r.id},        {"n", r.n},
              {"m", r.m},                {"method", r.method},      {"value", r.value},
              {"best_lb", r.best_lb},    {"lb_source", r.lb_source}, {"deviation_pct", r.deviation},
              {"stop", r.stop},          {"generations", r.generations}, {"pop_size", r.pop_size},
              {"decoder", r.decoder},    {"seconds", r.seconds}};
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  std::string file;
  std::string id;
  int n = 0, m = 0;
  double density = 0.0;
  std::string class_id = "NA";
  BoundReport bounds;
  std::map<std::string, std::pair<Time, double>> ub;  // method -> (value, seconds)
};

struct GroupKey {
  std::string density;
  int n, m;
  auto operator<=>(const GroupKey&) const = default;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scheduling identical machines with a conflict graph, minimising total completion time"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->add_option("--n", gen.n, "number of jobs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.m, "number of machines")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--class", gen.class_id, "processing-time class 1..6")->check(CLI::Range(1, 6));
  gen_cmd->add_option("--density", gen.density, "conflict edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "master seed")->required();
  gen_cmd->add_option("--count", gen.count, "instances to write")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen.out_dir, "output directory");
  gen_cmd->add_option("--grid", gen.grid, "benchmark grid")->check(CLI::IsMember({"paper"}));
  gen_cmd->add_option("--densities", gen.densities, "grid densities")->delimiter(',');
  gen_cmd->add_option("--sizes", gen.sizes, "grid job counts")->delimiter(',');
  gen_cmd->add_option("--machines", gen.machines, "grid machine counts")->delimiter(',');
  gen_cmd->add_option("--classes", gen.classes, "grid classes")->delimiter(',');
  gen_cmd->add_option("--graphs", gen.graphs, "conflict graphs per density")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--instances", gen.instances, "base instances per (n, m, class)")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--gz", gen.gz, "gzip the files");

  std::string solve_path;
  std::uint64_t solve_seed = 0;
  bool solve_json_flag = false, no_route = false;
  GaFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("instance", solve_path, "instance file")->required();
  solve_cmd->add_option("--seed", solve_seed, "GA seed")->capture_default_str();
  solve_cmd->add_flag("--json", solve_json_flag, "emit JSON instead of CSV");
  solve_cmd->add_flag("--no-route", no_route, "skip the special-structure solvers");
  solve_flags.attach(*solve_cmd);

  std::string bounds_path;
  std::vector<std::string> milp_results;
  bool bounds_json = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds");
  bounds_cmd->add_option("instance", bounds_path, "instance file")->required();
  bounds_cmd->add_option("--milp", milp_results, "solver result as F:PATH (F in 1..3)");
  bounds_cmd->add_flag("--json", bounds_json, "emit JSON instead of CSV");

  std::string exact_path, exact_method = "auto";
  std::optional<Time> exact_horizon;
  unsigned exact_threads = 0;
  auto* exact_cmd = app.add_subcommand("exact", "exhaustive optimum");
  exact_cmd->add_option("instance", exact_path, "instance file")->required();
  exact_cmd->add_option("--method", exact_method, "gt, ti, both or auto")
      ->check(CLI::IsMember({"gt", "ti", "both", "auto"}))
      ->capture_default_str();
  exact_cmd->add_option("--horizon", exact_horizon, "time-indexed horizon (default sum p)");
  exact_cmd->add_option("--threads", exact_threads, "enumeration workers (0 = hardware)");

  std::string export_path, export_form = "F3", export_prefix;
  std::optional<Time> export_horizon;
  auto* export_cmd = app.add_subcommand("export", "write LP model and warm start");
  export_cmd->add_option("instance", export_path, "instance file")->required();
  export_cmd->add_option("--formulation", export_form, "F1, F2 or F3")
      ->check(CLI::IsMember({"F1", "F2", "F3", "f1", "f2", "f3"}))
      ->capture_default_str();
  export_cmd->add_option("--horizon", export_horizon, "time horizon T (default sum p)");
  export_cmd->add_option("--out", export_prefix, "output prefix (default: instance path without extension + _F)");

  std::string bench_dir, bench_out;
  std::vector<std::string> bench_methods{"bounds", "ga"};
  std::uint64_t bench_seed = 0;
  unsigned bench_jobs = 1;
  GaFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark a directory of instances");
  bench_cmd->add_option("dir", bench_dir, "instance directory")->required();
  bench_cmd->add_option("--methods", bench_methods, "bounds, ga, ga-ls, exact")
      ->delimiter(',')
      ->check(CLI::IsMember({"bounds", "ga", "ga-ls", "exact"}));
  bench_cmd->add_option("--seed", bench_seed, "master seed")->capture_default_str();
  bench_cmd->add_option("--jobs", bench_jobs, "parallel instances")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out, "CSV path (default stdout)");
  bench_flags.attach(*bench_cmd);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "run with " << sub->get_name() << " --help for usage\n";
    } else {
      err << "run with --help for usage\n";
    }
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, gen_cmd->count("--n") > 0, out);

    if (solve_cmd->parsed()) {
      const Instance inst = read_instance(fs::path(solve_path));
      const GaConfig cfg = solve_flags.build(inst, solve_seed);
      const SolveRecord r = solve_instance(inst, label_of(inst, solve_path), cfg, !no_route);
      if (solve_json_flag) {
        out << solve_json(r).dump(2) << '\n';
      } else {
        out << "# " << kResultFormat << '\n' << kSolveHeader << '\n';
        write_solve_csv(r, out);
      }
      return 0;
    }

    if (bounds_cmd->parsed()) {
      const Instance inst = read_instance(fs::path(bounds_path));
      BoundReport rep = best_bound(inst);
      std::map<int, SolverResult> ingested;
      for (const std::string& spec : milp_results) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) {
          err << "error: --milp expects F:PATH, got '" << spec << "'\n";
          return 2;
        }
        const int f = static_cast<int>(parse_formulation(spec.substr(0, colon)));
        const SolverResult res = ingest_solver_result(spec.substr(colon + 1));
        if (!res.bound_absent()) merge_milp_bound(rep, f, *res.bound);
        ingested[f] = res;
      }
      if (bounds_json) {
        json j{{"format", kResultFormat}, {"instance", label_of(inst, bounds_path)}, {"best", rep.best},
               {"best_source", rep.best_name()}};
        for (int k = 0; k < 4; ++k) j["LB" + std::to_string(k + 1)] = {{"value", rep.lb[k]}, {"seconds", rep.seconds[k]}};
        for (const auto& [f, res] : ingested) {
          json e{{"status", res.status}};
          e["value"] = rep.milp[f - 1] ? json(*rep.milp[f - 1]) : json(nullptr);
          j["LB" + std::to_string(f + 4)] = e;
        }
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "# " << kResultFormat << '\n' << "instance,bound,value,seconds,status\n";
      const std::string id = csv_field(label_of(inst, bounds_path));
      for (int k = 0; k < 4; ++k)
        out << id << ",LB" << k + 1 << ',' << rep.lb[k] << ',' << fixed(rep.seconds[k], 6) << ",computed\n";
      for (const auto& [f, res] : ingested) {
        out << id << ",LB" << f + 4 << ',' << (rep.milp[f - 1] ? std::to_string(*rep.milp[f - 1]) : "NA") << ",NA,"
            << (res.bound_absent() ? "bound-absent" : res.status) << '\n';
      }
      out << id << ",best," << rep.best << ",NA," << rep.best_name() << '\n';
      return 0;
    }

    if (exact_cmd->parsed()) {
      const Instance inst = read_instance(fs::path(exact_path));
      std::string method = exact_method;
      if (method == "auto") {
        const bool ti_ok = inst.n() <= kTimeIndexedMaxJobs &&
                           exact_horizon.value_or(inst.total_processing()) <= kTimeIndexedMaxHorizon;
        method = ti_ok ? "both" : "gt";
      }
      out << "# " << kResultFormat << '\n' << "instance,method,value,seconds\n";
      const std::string id = csv_field(label_of(inst, exact_path));
      std::optional<Time> gt, ti;
      if (method == "gt" || method == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        gt = exact_gt_enum(inst, exact_threads).value;
        out << id << ",gt," << *gt << ',' << fixed(seconds_since(t0), 6) << '\n';
      }
      if (method == "ti" || method == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        ti = exact_time_indexed(inst, exact_horizon).value;
        out << id << ",ti," << *ti << ',' << fixed(seconds_since(t0), 6) << '\n';
      }
      if (gt && ti && *gt != *ti) {
        err << "error: oracles disagree (gt " << *gt << ", ti " << *ti << ")\n";
        return 1;
      }
      return 0;
    }

    if (export_cmd->parsed()) {
      const Instance inst = read_instance(fs::path(export_path));
      const Formulation f = parse_formulation(export_form);
      const MilpModel model = build_model(inst, f, export_horizon);
      std::string prefix = export_prefix;
      if (prefix.empty()) {
        fs::path p(export_path);
        while (p.has_extension()) p.replace_extension();
        prefix = p.string() + "_" + std::string(to_string(f));
      }
      export_lp(model, prefix + ".lp");
      const WarmStart ws = warm_start(inst, model);
      std::ofstream start(prefix + ".start");
      if (!start) throw Error("cannot open " + prefix + ".start for writing");
      write_start(model, ws, start);
      out << "model " << prefix << ".lp variables=" << model.variables.size()
          << " constraints=" << model.constraints.size() << " horizon=" << model.horizon << '\n'
          << "start " << prefix << ".start objective=" << ws.value << '\n';
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::vector<fs::path> files;
      if (!fs::is_directory(bench_dir)) throw Error("not a directory: " + bench_dir);
      for (const auto& e : fs::directory_iterator(bench_dir)) {
        if (!e.is_regular_file()) continue;
        const std::string name = e.path().filename().string();
        if (name.ends_with(".txt") || name.ends_with(".txt.gz") || name.ends_with(".inst")) files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw Error("no instance files in " + bench_dir);

      auto wants = [&](const std::string& m) {
        return std::find(bench_methods.begin(), bench_methods.end(), m) != bench_methods.end();
      };
      std::vector<BenchRow> rows(files.size());
      std::vector<std::string> failures(files.size());
      auto work = [&](std::size_t i) {
        try {
          BenchRow& row = rows[i];
          const Instance inst = read_instance(files[i]);
          row.file = files[i].filename().string();
          row.id = label_of(inst, row.file);
          row.n = inst.n();
          row.m = inst.m();
          const LabelInfo info = parse_label(row.id);
          row.density = info.density.value_or(inst.edge_density());
          if (info.class_id) row.class_id = std::to_string(*info.class_id);
          row.bounds = best_bound(inst);
          const std::uint64_t seed = combine_seed(bench_seed, row.id);
          for (const char* method : {"ga", "ga-ls"}) {
            if (!wants(method)) continue;
            GaFlags flags = bench_flags;
            if (std::string(method) == "ga-ls" && !flags.ls_iters) flags.ls_iters = inst.n() <= 50 ? 500 : 700;
            if (std::string(method) == "ga") flags.ls_iters = 0;
            const GaConfig cfg = flags.build(inst, seed);
            const auto t0 = std::chrono::steady_clock::now();
            const GaResult g = run_ga(inst, cfg);
            row.ub[method] = {g.value, seconds_since(t0)};
          }
          if (wants("exact")) {
            const auto t0 = std::chrono::steady_clock::now();
            if (auto special = route_exact(inst)) row.ub["exact"] = {special->value, seconds_since(t0)};
            else if (inst.n() <= kGtEnumMaxJobs) row.ub["exact"] = {exact_gt_enum(inst, 1).value, seconds_since(t0)};
          }
        } catch (const std::exception& e) {
          failures[i] = files[i].string() + ": " + e.what();
        }
      };
      const unsigned workers = std::min<unsigned>(bench_jobs, static_cast<unsigned>(files.size()));
      if (workers <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) work(i);
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
          pool.emplace_back([&] {
            for (std::size_t i = next++; i < files.size(); i = next++) work(i);
          });
      }
      for (const std::string& f : failures)
        if (!f.empty()) throw Error(f);

      std::vector<std::string> ub_methods;
      for (const char* m : {"ga", "ga-ls", "exact"})
        if (wants(m)) ub_methods.push_back(m);

      std::ofstream file;
      if (!bench_out.empty()) {
        file.open(bench_out);
        if (!file) throw Error("cannot open " + bench_out + " for writing");
      }
      std::ostream& os = bench_out.empty() ? out : file;
      os << "# " << kResultFormat << '\n' << "instance,n,m,density,class";
      for (int k = 1; k <= 4; ++k) os << ",lb" << k << ",lb" << k << "_s";
      for (const auto& m : ub_methods) os << ',' << m << ',' << m << "_s";
      os << ",best_lb,best_ub,deviation_pct,gap_pct\n";

      std::map<GroupKey, std::vector<const BenchRow*>> groups;
      for (const BenchRow& row : rows) {
        os << csv_field(row.id) << ',' << row.n << ',' << row.m << ',' << fixed(row.density, 2) << ',' << row.class_id;
        for (int k = 0; k < 4; ++k) os << ',' << row.bounds.lb[k] << ',' << fixed(row.bounds.seconds[k], 6);
        std::optional<Time> best_ub;
        for (const auto& m : ub_methods) {
          auto it = row.ub.find(m);
          if (it == row.ub.end()) {
            os << ",NA,NA";
            continue;
          }
          os << ',' << it->second.first << ',' << fixed(it->second.second, 6);
          best_ub = best_ub ? std::min(*best_ub, it->second.first) : it->second.first;
        }
        os << ',' << row.bounds.best;
        if (best_ub) {
          const MetricReport r = metrics(row.bounds.best, *best_ub, *best_ub);
          os << ',' << *best_ub << ',' << deviation_str(r) << ',' << gap_str(r) << '\n';
        } else {
          os << ",NA,NA,NA\n";
        }
        groups[{fixed(row.density, 2), row.n, row.m}].push_back(&row);
      }

      // Per (density, n, m): b = % of instances where the bound is best,
      // c = mean % deviation below the best bound, d = mean seconds; for
      // upper bounds the share matching the best bound, the mean %
      // deviation from it and the mean seconds; coincide/gap over best UB.
      os << "\n# summary\n" << "density,n,m,count";
      for (int k = 1; k <= 4; ++k) os << ",lb" << k << "_b,lb" << k << "_c,lb" << k << "_d";
      for (const auto& m : ub_methods) os << ',' << m << "_at_lb," << m << "_dev," << m << "_s";
      if (!ub_methods.empty()) os << ",coincide_pct,gap_pct";
      os << '\n';
      for (const auto& [key, members] : groups) {
        const double cnt = static_cast<double>(members.size());
        os << key.density << ',' << key.n << ',' << key.m << ',' << members.size();
        for (int k = 0; k < 4; ++k) {
          double best = 0, dev = 0, secs = 0;
          for (const BenchRow* r : members) {
            best += r->bounds.lb[k] == r->bounds.best;
            if (r->bounds.best > 0)
              dev += static_cast<double>(r->bounds.best - r->bounds.lb[k]) / static_cast<double>(r->bounds.best);
            secs += r->bounds.seconds[k];
          }
          os << ',' << fixed(100 * best / cnt) << ',' << fixed(100 * dev / cnt) << ',' << fixed(secs / cnt, 6);
        }
        double coincide = 0, gap = 0;
        for (const auto& m : ub_methods) {
          double at = 0, dev = 0, secs = 0, seen = 0;
          for (const BenchRow* r : members) {
            auto it = r->ub.find(m);
            if (it == r->ub.end()) continue;
            ++seen;
            at += it->second.first == r->bounds.best;
            if (r->bounds.best > 0)
              dev += static_cast<double>(it->second.first - r->bounds.best) / static_cast<double>(r->bounds.best);
            secs += it->second.second;
          }
          if (seen == 0) os << ",NA,NA,NA";
          else os << ',' << fixed(100 * at / seen) << ',' << fixed(100 * dev / seen) << ',' << fixed(secs / seen, 6);
        }
        if (!ub_methods.empty()) {
          double seen = 0;
          for (const BenchRow* r : members) {
            std::optional<Time> ub;
            for (const auto& [m, v] : r->ub) ub = ub ? std::min(*ub, v.first) : v.first;
            if (!ub) continue;
            ++seen;
            coincide += *ub == r->bounds.best;
            if (*ub > 0) gap += static_cast<double>(*ub - r->bounds.best) / static_cast<double>(*ub);
          }
          if (seen == 0) os << ",NA,NA";
          else os << ',' << fixed(100 * coincide / seen) << ',' << fixed(100 * gap / seen);
        }
        os << '\n';
      }
      return 0;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace confsched

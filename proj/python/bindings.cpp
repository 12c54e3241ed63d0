#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "confsched/bounds.hpp"
#include "confsched/decoders.hpp"
#include "confsched/error.hpp"
#include "confsched/exact.hpp"
#include "confsched/ga.hpp"
#include "confsched/instgen.hpp"
#include "confsched/milp.hpp"
#include "confsched/polycases.hpp"

namespace py = pybind11;
using namespace confsched;

namespace {

Instance make_instance(int m, std::vector<Time> p, const std::vector<std::pair<int, int>>& edges, std::string id) {
  const int n = static_cast<int>(p.size());
  return Instance(m, std::move(p), ConflictGraph::from_edges(n, edges), std::move(id));
}

py::dict schedule_dict(const Schedule& s, Time value) {
  py::dict d;
  d["value"] = value;
  d["machines"] = s.machine_of;
  d["starts"] = s.start_of;
  return d;
}

}  // namespace

PYBIND11_MODULE(confsched, m) {
  m.doc() = "Identical parallel machines with a conflict graph, total completion time";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<int>())
      .def_readwrite("machines", &Schedule::machine_of)
      .def_readwrite("starts", &Schedule::start_of);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("m"), py::arg("p"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           py::arg("id") = "")
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def_property_readonly("p", &Instance::proc)
      .def_property_readonly("id", &Instance::id)
      .def_property_readonly("edges", [](const Instance& i) { return i.conflicts().edges(); })
      .def_property_readonly("density", &Instance::edge_density)
      .def("conflict", &Instance::conflict)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + i.id() + " n=" + std::to_string(i.n()) + " m=" + std::to_string(i.m()) + ">";
      });

  m.def(
      "generate",
      [](int n, int machines, int class_id, double density, std::uint64_t seed, std::string id) {
        return generate({n, machines, class_id, density, seed}, std::move(id));
      },
      py::arg("n"), py::arg("m"), py::arg("class_id"), py::arg("density"), py::arg("seed"), py::arg("id") = "");
  m.def("parse_instance", &parse_instance);
  m.def("format_instance", &format_instance);
  m.def("read_instance", py::overload_cast<const std::filesystem::path&>(&read_instance));
  m.def("write_instance", py::overload_cast<const Instance&, const std::filesystem::path&>(&write_instance));

  m.def("check_feasible", &check_feasible);
  m.def("total_flow_time", &total_flow_time);

  m.def(
      "decode",
      [](const Instance& inst, const std::vector<JobId>& perm, const std::string& variant) {
        const DecodeResult r = decode(inst, perm, parse_decoder(variant));
        py::dict d = schedule_dict(r.schedule, r.total);
        d["order"] = r.order;
        return d;
      },
      py::arg("inst"), py::arg("perm"), py::arg("decoder") = "ND");

  m.def("bounds", [](const Instance& inst) {
    const BoundReport r = best_bound(inst);
    py::dict d;
    for (int k = 0; k < 4; ++k) d[py::str("LB" + std::to_string(k + 1))] = r.lb[k];
    d["best"] = r.best;
    d["best_source"] = r.best_name();
    return d;
  });

  m.def("structure", [](const Instance& inst) { return std::string(to_string(detect_structure(inst))); });
  m.def("solve_special", [](const Instance& inst) -> py::object {
    const auto r = route_exact(inst);
    if (!r) return py::none();
    return schedule_dict(r->schedule, r->value);
  });

  m.def(
      "exact",
      [](const Instance& inst, const std::string& method) {
        const ExactResult r = method == "ti" ? exact_time_indexed(inst) : exact_gt_enum(inst, 1);
        py::dict d = schedule_dict(r.schedule, r.value);
        d["perm"] = r.perm;
        return d;
      },
      py::arg("inst"), py::arg("method") = "gt");

  m.def(
      "run_ga",
      [](const Instance& inst, const std::string& preset, std::uint64_t seed, std::optional<int> pop_size,
         std::optional<std::int64_t> max_iters, std::optional<std::int64_t> max_no_improve,
         std::optional<int> ls_iters, std::optional<std::string> decoder) {
        GaConfig cfg = preset == "paper"      ? GaConfig::paper_preset(inst.edge_density())
                       : preset == "paper-ls" ? GaConfig::paper_ls_preset(inst.n(), inst.edge_density())
                       : preset == "tuning"   ? GaConfig::tuning_baseline()
                                              : throw ParameterError("unknown preset '" + preset + "'");
        cfg.rng_seed = seed;
        if (pop_size) cfg.pop_size = *pop_size;
        if (max_iters) cfg.max_iters = *max_iters;
        if (max_no_improve) cfg.max_no_improve = *max_no_improve;
        if (ls_iters) cfg.ls_iters = *ls_iters;
        if (decoder) cfg.decoder = parse_decoder(*decoder);
        const GaResult r = [&] {
          py::gil_scoped_release release;
          return run_ga(inst, cfg);
        }();
        py::dict d = schedule_dict(r.schedule, r.value);
        d["perm"] = r.perm;
        d["decoder"] = std::string(to_string(r.decoder));
        d["generations"] = r.stats.generations;
        d["stop"] = std::string(to_string(r.stats.stop));
        d["lower_bound"] = r.stats.lower_bound;
        d["seconds"] = r.stats.seconds;
        return d;
      },
      py::arg("inst"), py::arg("preset") = "paper", py::arg("seed") = 0, py::arg("pop_size") = py::none(),
      py::arg("max_iters") = py::none(), py::arg("max_no_improve") = py::none(), py::arg("ls_iters") = py::none(),
      py::arg("decoder") = py::none());

  m.def(
      "export_lp",
      [](const Instance& inst, const std::string& formulation, std::optional<Time> horizon) {
        return format_lp(build_model(inst, parse_formulation(formulation), horizon));
      },
      py::arg("inst"), py::arg("formulation") = "F3", py::arg("horizon") = py::none());
}

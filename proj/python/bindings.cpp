// Copyright 2026 The netdistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the core operations. Dense operators cross the boundary
// as numpy arrays; graphs and decompositions as opaque handles.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netdistill/channels.hpp"
#include "netdistill/errors.hpp"
#include "netdistill/graph.hpp"
#include "netdistill/hilbert.hpp"
#include "netdistill/protocol.hpp"
#include "netdistill/spectra.hpp"
#include "netdistill/spider.hpp"
#include "netdistill/version.hpp"

namespace py = pybind11;
using namespace netdistill;

namespace {

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::kPlus;
  if (s == "-") return Sign::kMinus;
  throw InputError("sign must be '+' or '-'");
}

std::optional<std::size_t> finite_or_none(const Distance& d) {
  if (d.is_finite()) return d.value();
  return std::nullopt;
}

py::list spiders_to_list(const SpiderDecomposition& dec) {
  py::list out;
  for (const auto& s : dec.spiders) {
    py::dict legs;
    for (const auto& leg : s.legs) legs[py::int_(leg.target)] = leg.path.vertices();
    out.append(legs);
  }
  return out;
}

py::dict plan_to_dict(const ProtocolPlan& plan) {
  py::dict d;
  d["N"] = plan.order;
  d["min_degree"] = plan.min_degree;
  d["edge_connectivity"] = plan.edge_connectivity;
  d["c"] = plan.c;
  d["p0"] = plan.p0;
  d["M_n"] = plan.budget;
  d["leg_bound"] = plan.leg_bound;
  d["center"] = plan.center;
  d["subset"] = plan.subset;
  d["premises_hold"] = plan.premises_hold;
  d["above_threshold"] = plan.above_threshold;
  return d;
}

py::dict report_to_dict(const ProtocolReport& r) {
  py::dict d;
  d["model"] = ProtocolReport::kModel;
  d["p"] = r.p;
  d["plan"] = plan_to_dict(r.plan);
  d["extraction"] = r.extraction;
  d["stop_reason"] = to_string(r.stop_reason);
  d["spiders_found"] = r.spiders_found();
  py::list targets;
  for (const auto& t : r.targets) {
    py::dict td;
    td["target"] = t.target;
    td["copies"] = t.copies;
    td["fallback_copy"] = t.fallback_copy;
    td["max_disjoint_paths"] = t.max_disjoint_paths;
    td["chunk_visibility"] = t.chunk_visibility;
    td["p_prime"] = t.distilled.visibility;
    td["rounds"] = t.distilled.rounds;
    td["below_threshold"] = t.distilled.below_threshold;
    targets.append(td);
  }
  d["targets"] = targets;
  d["p_prime_min"] = r.p_prime_min;
  d["fidelity"] = r.fidelity;
  d["necessary_condition_violated"] = r.necessary_condition_violated;
  std::ostringstream text;
  write_report(text, r);
  d["text"] = text.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partial distillability of noisy isotropic networks";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ArithmeticError);

  // -- graphs
  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) es.emplace_back(u, v);
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degree", &Graph::degree)
      .def("neighbours", [](const Graph& g, Vertex v) {
        const auto n = g.neighbours(v);
        return std::vector<Vertex>(n.begin(), n.end());
      })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("n"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed") = 0);
  m.def("grid_graph", [](std::size_t n, std::size_t k) { return grid_graph({n, k}); }, py::arg("n"), py::arg("k"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("q"), py::arg("seed") = 0);
  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::size_t k, std::uint64_t seed) {
        return generate(parse_graph_family(family), {n, k, seed});
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 1, py::arg("seed") = 0);
  m.def("edge_connectivity", &edge_connectivity);
  m.def("max_edge_disjoint_paths", &max_edge_disjoint_paths, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("is_connected", &is_connected);
  m.def("diameter", [](const Graph& g) { return finite_or_none(diameter(g)); }, "None when disconnected");
  m.def("distance", [](const Graph& g, Vertex u, Vertex v) { return finite_or_none(distance(g, u, v)); });
  m.def("degree_stats", [](const Graph& g) {
    const auto s = degree_stats(g);
    return py::dict(py::arg("min_degree") = s.min_degree, py::arg("max_degree") = s.max_degree);
  });

  // -- spiders
  py::class_<SpiderDecomposition>(m, "SpiderDecomposition")
      .def("__len__", &SpiderDecomposition::size)
      .def_readonly("center", &SpiderDecomposition::center)
      .def_readonly("subset", &SpiderDecomposition::subset)
      .def_readonly("leg_length_bound", &SpiderDecomposition::leg_length_bound)
      .def_property_readonly("stop_reason", [](const SpiderDecomposition& d) { return to_string(d.stop_reason); })
      .def_property_readonly("spiders", &spiders_to_list, "one {target: vertices} dict per spider")
      .def("validate", [](const SpiderDecomposition& d) {
        const auto r = validate_spiders(d);
        return py::make_tuple(r.ok, r.violation);
      });

  m.def("lemma6_guarantee", [](const Graph& g, const std::vector<Vertex>& subset) {
    const auto s = lemma6_guarantee(g, subset);
    return py::dict(py::arg("budget") = s.budget, py::arg("c") = s.c(), py::arg("leg_bound") = s.leg_bound(),
                    py::arg("edge_connectivity") = s.edge_connectivity, py::arg("min_degree") = s.min_degree);
  });
  m.def(
      "extract_spiders_greedy",
      [](const Graph& g, const std::vector<Vertex>& subset, Vertex center, std::optional<std::size_t> max_spiders,
         bool stop_at_budget) {
        GreedyOptions opts;
        opts.max_spiders = max_spiders;
        opts.stop_at_budget = stop_at_budget;
        return extract_spiders_greedy(g, subset, center, opts);
      },
      py::arg("g"), py::arg("subset"), py::arg("center"), py::arg("max_spiders") = py::none(),
      py::arg("stop_at_budget") = false);
  m.def("extract_spiders", &extract_spiders, py::arg("g"), py::arg("subset"), py::arg("center"),
        py::arg("leg_length_bound") = py::none(), py::arg("max_spiders") = py::none());
  m.def(
      "grid_spiders",
      [](std::size_t n, std::size_t k, const std::vector<Vertex>& subset, Vertex center,
         std::optional<std::size_t> multiplicity) { return grid_spiders({n, k}, subset, center, multiplicity); },
      py::arg("n"), py::arg("k"), py::arg("subset"), py::arg("center"), py::arg("multiplicity") = py::none());

  // -- dense states and channels
  m.def("isotropic", [](std::size_t d, double p) { return isotropic(d, p).matrix(); }, py::arg("d"), py::arg("p"));
  m.def("ghz", [](std::size_t n) { return ghz(n).amplitudes(); }, py::arg("n"));
  m.def(
      "psi_basis", [](std::size_t n, std::size_t j, const std::string& sign) {
        return psi_basis(n, j, parse_sign(sign)).amplitudes();
      },
      py::arg("n"), py::arg("j"), py::arg("sign") = "+");
  m.def(
      "partial_transpose",
      [](const Matrix& rho, const Dims& dims, const std::vector<std::size_t>& factors) {
        return partial_transpose(DensityOperator(dims, rho), factors).matrix;
      },
      py::arg("rho"), py::arg("dims"), py::arg("factors"));
  m.def(
      "fidelity",
      [](const Matrix& rho, const Matrix& sigma, const Dims& dims) {
        return fidelity(DensityOperator(dims, rho), DensityOperator(dims, sigma));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("dims"));
  m.def(
      "star_teleport",
      [](const Matrix& rho, const Dims& dims, double p) { return star_teleport(DensityOperator(dims, rho), p).matrix(); },
      py::arg("rho"), py::arg("dims"), py::arg("p"));
  m.def("teleported_ghz_closed_form", [](std::size_t n, double p) { return teleported_ghz_closed_form(n, p).matrix(); },
        py::arg("n"), py::arg("p"));
  m.def("path_teleport_visibility", &path_teleport_visibility, py::arg("p"), py::arg("length"));

  // -- spectra
  m.def("s_j_closed", &s_j_closed, py::arg("n"), py::arg("p"), py::arg("j"));
  m.def("s_j_direct", &s_j_direct, py::arg("n"), py::arg("p"), py::arg("j"));
  m.def(
      "ptranspose_eigenvalue",
      [](std::size_t n, std::size_t j, const std::string& sign, const std::vector<std::size_t>& cut, double p) {
        const Bipartition b = normalize_bipartition(n, cut);
        return ptranspose_eigenvalue({n, j, parse_sign(sign), b}, p);
      },
      py::arg("n"), py::arg("j"), py::arg("sign"), py::arg("cut"), py::arg("p"));
  m.def(
      "teleported_ghz_spectrum",
      [](std::size_t n, double p, const std::vector<std::size_t>& cut) {
        return teleported_ghz_spectrum(n, p, cut).eigenvalues;
      },
      py::arg("n"), py::arg("p"), py::arg("cut"), "entry 2j is the + eigenvalue, 2j+1 the - eigenvalue");
  m.def("min_ptranspose_eigenvalue", &min_ptranspose_eigenvalue, py::arg("n"), py::arg("p"), py::arg("w"));
  m.def(
      "is_ppt_teleported_ghz",
      [](std::size_t n, double p, const std::vector<std::size_t>& cut, bool full_scan) {
        return is_ppt_teleported_ghz(n, p, cut, full_scan ? PptCheck::kFullScan : PptCheck::kFast);
      },
      py::arg("n"), py::arg("p"), py::arg("cut"), py::arg("full_scan") = false);
  m.def("ppt_crossover_n0", &ppt_crossover_n0, py::arg("p"), py::arg("w"));
  m.def(
      "ppt_scan",
      [](const std::vector<double>& ps, const std::vector<std::size_t>& ws, std::size_t n_min, std::size_t n_max) {
        py::list out;
        for (const auto& r : ppt_scan(ps, ws, n_min, n_max)) {
          out.append(py::dict(py::arg("n") = r.n, py::arg("p") = r.p, py::arg("w") = r.w,
                              py::arg("min_eigenvalue") = r.min_eigenvalue, py::arg("is_ppt") = r.is_ppt,
                              py::arg("n0_flag") = r.at_crossover, py::arg("n0") = r.n0));
        }
        return out;
      },
      py::arg("ps"), py::arg("ws"), py::arg("n_min"), py::arg("n_max"));

  // -- protocol
  m.def("threshold_p0", &threshold_p0, py::arg("c"), py::arg("d") = 2);
  m.def("downgrade_visibility", &downgrade_visibility, py::arg("p"), py::arg("actual"), py::arg("uniform"));
  m.def("distill_recurrence_step", &distill_recurrence_step, py::arg("f"));
  m.def(
      "distilled_visibility",
      [](double p, std::size_t copies) {
        const auto d = distilled_visibility(p, copies);
        return py::dict(py::arg("visibility") = d.visibility, py::arg("rounds") = d.rounds,
                        py::arg("copies_consumed") = d.copies_consumed, py::arg("below_threshold") = d.below_threshold);
      },
      py::arg("p_chunk"), py::arg("copies"));
  m.def(
      "simulate_partial_distillation",
      [](const Graph& g, const std::vector<Vertex>& subset, double p, std::optional<Vertex> center, bool uniform_legs,
         std::size_t dimension) {
        ProtocolOptions opts;
        opts.p = p;
        opts.center = center;
        opts.uniform_legs = uniform_legs;
        opts.dimension = dimension;
        Dims dims(subset.size(), dimension);
        Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
        // Generalised GHZ: (|0...0> + ... + |d-1 ... d-1>)/sqrt(d).
        Eigen::Index stride = 0;
        for (std::size_t i = 0, place = 1; i < subset.size(); ++i, place *= dimension) stride += place;
        for (std::size_t a = 0; a < dimension; ++a) amplitudes(a * stride) = 1.0 / std::sqrt(double(dimension));
        return report_to_dict(simulate_partial_distillation(g, subset, PureState(dims, amplitudes), opts));
      },
      py::arg("g"), py::arg("subset"), py::arg("p"), py::arg("center") = py::none(), py::arg("uniform_legs") = false,
      py::arg("dimension") = 2, "GHZ target on V0; returns the report as a dict");
  m.def(
      "necessary_condition_scan",
      [](const std::string& family, const std::vector<std::size_t>& sizes, std::size_t k, std::uint64_t seed) {
        const auto scan = necessary_condition_scan(parse_graph_family(family), sizes, k, seed);
        py::list rows;
        for (const auto& r : scan.rows) {
          rows.append(py::dict(py::arg("size") = r.size, py::arg("N") = r.order,
                               py::arg("edge_connectivity") = r.edge_connectivity, py::arg("min_degree") = r.min_degree));
        }
        return py::make_tuple(rows, to_string(scan.verdict));
      },
      py::arg("family"), py::arg("sizes"), py::arg("k") = 1, py::arg("seed") = 0);
}

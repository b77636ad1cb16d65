// Copyright 2026 The qsat-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "qsat/analysis.hpp"
#include "qsat/gadgets.hpp"
#include "qsat/hypergraph.hpp"
#include "qsat/peeling.hpp"
#include "qsat/rank_oracle.hpp"

namespace py = pybind11;
using namespace qsat;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

std::vector<std::vector<Vertex>> edge_list(const Hypergraph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) edges.emplace_back(g.edge(i).begin(), g.edge(i).end());
  return edges;
}

BoundMethod parse_method(const std::string& name) {
  if (name == "sunflower") return BoundMethod::Sunflower;
  if (name == "nosegay") return BoundMethod::Nosegay;
  if (name == "general_k" || name == "general-k") return BoundMethod::GeneralK;
  if (name == "single_clause" || name == "single-clause") return BoundMethod::SingleClause;
  throw py::value_error("unknown bound method: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generic ranks, gadget formulas, peeling and threshold bounds for quantum k-SAT";

  py::register_exception<NumericalInstability>(m, "NumericalInstability", PyExc_ArithmeticError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init<std::size_t, const std::vector<std::vector<Vertex>>&>(), py::arg("n"), py::arg("edges"))
      .def("add_edge", [](Hypergraph& g, const std::vector<Vertex>& e) { g.add_edge(e); })
      .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
      .def_property_readonly("edge_count", &Hypergraph::edge_count)
      .def_property_readonly("edges", &edge_list)
      .def("to_text",
           [](const Hypergraph& g) {
             std::ostringstream out;
             write_hypergraph(out, g);
             return out.str();
           })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_hypergraph(in);
                  })
      .def(py::self == py::self)
      .def("__repr__", [](const Hypergraph& g) {
        return "Hypergraph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("random_hypergraph", &random_hypergraph, py::arg("n"), py::arg("m"), py::arg("k") = 3, py::arg("seed"));
  m.def("attach", [](const Hypergraph& g, const Hypergraph& h, const std::vector<Vertex>& embedding) {
    return attach(g, h, embedding);
  });
  m.def("disjoint_union", &disjoint_union);

  py::class_<RankResult>(m, "RankResult")
      .def_readonly("rank", &RankResult::rank)
      .def_property_readonly("backend", [](const RankResult& r) { return std::string(to_string(r.backend)); })
      .def_readonly("confidence", &RankResult::confidence)
      .def("__repr__", [](const RankResult& r) {
        return "RankResult(rank=" + std::to_string(r.rank) + ", backend=" + to_string(r.backend) + ")";
      });

  m.def(
      "rank_field",
      [](const Hypergraph& g, int trials, std::uint64_t seed, std::size_t max_qubits) {
        return generic_rank_field(g, trials, seed, kDefaultFieldPrime, RankLimits{max_qubits, false});
      },
      py::arg("graph"), py::arg("trials") = 3, py::arg("seed") = 1, py::arg("max_qubits") = 13);
  m.def(
      "rank_float",
      [](const Hypergraph& g, int samples, std::uint64_t seed, double tolerance, std::size_t max_qubits) {
        return generic_rank_float_sampled(g, samples, seed, tolerance, RankLimits{max_qubits, false});
      },
      py::arg("graph"), py::arg("samples") = 3, py::arg("seed") = 1, py::arg("tolerance") = kDefaultRankTolerance,
      py::arg("max_qubits") = 13);

  m.def("sunflower_rank", [](int d, int k) { return to_py(sunflower_rank(d, k).rank); }, py::arg("d"),
        py::arg("k") = 3);
  m.def("nosegay3_rank", [](int a, int b, int c) { return to_py(nosegay3_rank(a, b, c).rank); });
  m.def("nosegay_hang_rank", [](int a, int b, int c) { return to_py(nosegay_hang_rank(a, b, c).rank); });
  m.def("nosegay_k_rank", [](const std::vector<int>& d, int k) { return to_py(nosegay_k_rank(d, k).rank); },
        py::arg("d"), py::arg("k"));
  m.def("k2_rank", [](const Hypergraph& g) { return to_py(k2_rank(g)); });

  py::class_<EmpiricalBound>(m, "EmpiricalBound")
      .def_readonly("value", &EmpiricalBound::value)
      .def_readonly("step_count", &EmpiricalBound::step_count)
      .def_readonly("anomalies", &EmpiricalBound::anomalies)
      .def_readonly("zero_rank", &EmpiricalBound::zero_rank);

  m.def(
      "peel",
      [](const Hypergraph& g, const std::string& algorithm, std::uint64_t seed) {
        if (algorithm == "sunflower") return empirical_log_rank(sunflower_peel(g, seed));
        if (algorithm == "nosegay") return empirical_log_rank(nosegay_peel(g, seed));
        throw py::value_error("algorithm must be 'sunflower' or 'nosegay'");
      },
      py::arg("graph"), py::arg("algorithm"), py::arg("seed"));
  m.def(
      "peel_trace_csv",
      [](const Hypergraph& g, const std::string& algorithm, std::uint64_t seed) {
        std::ostringstream out;
        if (algorithm == "sunflower")
          write_trace_csv(out, sunflower_peel(g, seed));
        else if (algorithm == "nosegay")
          write_trace_csv(out, nosegay_peel(g, seed));
        else
          throw py::value_error("algorithm must be 'sunflower' or 'nosegay'");
        return out.str();
      },
      py::arg("graph"), py::arg("algorithm"), py::arg("seed"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_property_readonly("method", [](const BoundReport& r) { return std::string(to_string(r.method)); })
      .def_readonly("alpha", &BoundReport::alpha)
      .def_readonly("k", &BoundReport::k)
      .def_readonly("value", &BoundReport::value)
      .def_readonly("quadrature_error", &BoundReport::quadrature_error)
      .def_readonly("tail_bound", &BoundReport::tail_bound)
      .def_property_readonly("verdict", [](const BoundReport& r) { return std::string(r.verdict()); })
      .def("__repr__", [](const BoundReport& r) {
        return std::string("BoundReport(") + to_string(r.method) + ", alpha=" + std::to_string(r.alpha) +
               ", value=" + std::to_string(r.value) + ")";
      });

  m.def("sunflower_bound", [](double alpha, int k, int d_max) { return sunflower_bound(alpha, k, d_max); },
        py::arg("alpha"), py::arg("k") = 3, py::arg("d_max") = 100);
  m.def("nosegay_bound", [](double alpha, int truncation) { return nosegay_bound(alpha, truncation); },
        py::arg("alpha"), py::arg("truncation") = 50);
  m.def("general_k_bound", &general_k_bound, py::arg("alpha"), py::arg("k"));
  m.def("single_clause_bound", &single_clause_bound, py::arg("alpha"), py::arg("k"));
  m.def("solve_b", &solve_b);
  m.def("single_clause_threshold", &single_clause_threshold, py::arg("k"));
  m.def("sunflower_degree_density",
        [](int d, double alpha, int k) { return sunflower_degree_density(d, alpha, k); }, py::arg("d"),
        py::arg("alpha"), py::arg("k") = 3);
  m.def(
      "nosegay_ode",
      [](double alpha, double nu) {
        const OdeState s = nosegay_ode(alpha, nu);
        return py::make_tuple(s.mu, s.nu0);
      },
      py::arg("alpha"), py::arg("nu"));
  m.def(
      "threshold",
      [](const std::string& method, int k) { return threshold_root(parse_method(method), k); },
      py::arg("method"), py::arg("k") = 3);
}

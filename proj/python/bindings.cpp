#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convexcycles/convexity.hpp"
#include "convexcycles/errors.hpp"
#include "convexcycles/extremal.hpp"
#include "convexcycles/generators.hpp"
#include "convexcycles/graph6.hpp"
#include "convexcycles/report.hpp"
#include "convexcycles/spectral.hpp"

namespace py = pybind11;
using namespace convexcycles;

namespace {

py::object to_int(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

mpz_class from_int(const py::int_& i) { return mpz_class(py::str(i).cast<std::string>()); }

py::object to_fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(to_int(q.get_num()), to_int(q.get_den()));
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list coefficients(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_int(c));
  return out;
}

struct Analysis {
  MetricProfile profile;
  CycleCensus census;
};

Analysis analyse(const Graph& g, unsigned threads) {
  Analysis a{compute_profile(g, threads), {}};
  a.census = enumerate_convex_cycles(g, a.profile, threads);
  return a;
}

py::dict census_dict(const CycleCensus& c) {
  py::list cycles;
  for (const auto& cycle : c.cycles) cycles.append(py::cast(cycle.vertices()));
  py::dict d;
  d["rho"] = c.rho;
  d["rho_odd"] = c.rho_odd;
  d["rho_even"] = c.rho_even;
  d["histogram"] = c.histogram;
  d["cycles"] = cycles;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Convex cycles, the n(m - n + 1)/g bound and girth-cycle counts";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidEdge>(m, "InvalidEdge", error);
  py::register_exception<DuplicateEdge>(m, "DuplicateEdge", error);
  py::register_exception<OutOfRange>(m, "OutOfRange", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", error);
  py::register_exception<Disconnected>(m, "Disconnected", error);
  py::register_exception<InvalidCycle>(m, "InvalidCycle", error);
  py::register_exception<NotApplicable>(m, "NotApplicable", error);
  py::register_exception<InconsistentInput>(m, "InconsistentInput", error);
  py::register_exception<ConsistencyViolation>(m, "ConsistencyViolation", error);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
        auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("is_connected", &Graph::is_connected)
      .def("is_regular", &Graph::is_regular)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("write_graph6", &write_graph6, py::arg("graph"));
  m.def("read_graphs", &read_graphs, py::arg("text"));
  m.def("generate", &generators::by_name, py::arg("family"), py::arg("params") = std::vector<std::string>{},
        py::arg("seed") = 0);
  m.def("attach_pendant", &attach_pendant, py::arg("graph"), py::arg("anchor"));
  m.def("delete_vertex", &delete_vertex, py::arg("graph"), py::arg("vertex"));

  auto opt_length = [](Length x) -> py::object { return x == kInfinite ? py::object(py::none()) : py::object(py::int_(x)); };
  m.def("girth", [opt_length](const Graph& g) { return opt_length(girth(g)); }, py::arg("graph"));
  m.def("diameter", [opt_length](const Graph& g) { return opt_length(diameter(g)); }, py::arg("graph"));

  m.def(
      "convex_cycles", [](const Graph& g, unsigned threads) { return census_dict(analyse(g, threads).census); },
      py::arg("graph"), py::arg("threads") = 0);
  m.def(
      "brute_force_convex_cycles",
      [](const Graph& g, std::size_t max_len) {
        return census_dict(brute_force_convex_cycles(g, max_len ? max_len : g.order()));
      },
      py::arg("graph"), py::arg("max_len") = 0);
  m.def(
      "is_convex_cycle",
      [](const Graph& g, const std::vector<Vertex>& cycle) {
        return is_convex_cycle(g, compute_profile(g), Cycle::from_sequence(cycle));
      },
      py::arg("graph"), py::arg("cycle"));

  m.def(
      "convex_cycle_bound",
      [](std::size_t n, std::size_t m_, Length g) { return to_fraction(convex_cycle_bound(n, m_, g)); },
      py::arg("n"), py::arg("m"), py::arg("g"));
  m.def(
      "check_extremal",
      [](const Graph& g, unsigned threads) {
        const Analysis a = analyse(g, threads);
        const ExtremalReport r = check_extremal(g, a.profile, a.census);
        py::dict d;
        d["rho"] = r.rho;
        d["rho_even"] = r.rho_even;
        d["bound"] = to_fraction(r.bound);
        d["equality"] = r.equality;
        d["even_equality"] = r.even_equality;
        d["classification"] = to_string(r.classification);
        return d;
      },
      py::arg("graph"), py::arg("threads") = 0);
  m.def(
      "is_moore",
      [opt_length](const Graph& g) {
        const MooreReport r = is_moore(g, compute_profile(g));
        py::dict d;
        d["is_moore"] = r.is_moore;
        d["r"] = opt_length(r.r);
        d["girth"] = opt_length(r.girth);
        d["regular_degree"] = r.regular_degree;
        return d;
      },
      py::arg("graph"));
  m.def(
      "theorem2_check",
      [](const Graph& g) {
        const Theorem2Result r = theorem2_check(g, compute_profile(g));
        py::dict d;
        d["count"] = r.count;
        d["target"] = to_fraction(r.target);
        d["is_moore_by_count"] = r.is_moore_by_count;
        return d;
      },
      py::arg("graph"));

  m.def("char_poly", [](const Graph& g) { return coefficients(char_poly(g)); }, py::arg("graph"),
        "Coefficients of det(xI - A), constant term first.");
  m.def(
      "expand_factored",
      [](const std::vector<std::pair<py::int_, std::size_t>>& factors) {
        std::vector<std::pair<mpz_class, std::size_t>> converted;
        for (const auto& [root, mult] : factors) converted.emplace_back(from_int(root), mult);
        return coefficients(expand_factored(converted));
      },
      py::arg("factors"), "Coefficients of the product of (x - root)^multiplicity.");
  m.def(
      "girth_cycle_count_spectral",
      [](const std::vector<py::int_>& coeffs, std::size_t n, std::size_t g) {
        std::vector<mpz_class> converted;
        for (const auto& c : coeffs) converted.push_back(from_int(c));
        return to_int(girth_cycle_count_spectral(IntPolynomial(std::move(converted)), n, g));
      },
      py::arg("coefficients"), py::arg("n"), py::arg("g"));

  m.def(
      "analyze",
      [](const Graph& g, unsigned threads, std::size_t spectral_cap, bool include_polynomial) {
        AnalysisOptions options;
        options.threads = threads;
        options.spectral_cap = spectral_cap;
        options.include_polynomial = include_polynomial;
        return json_to_py(to_json(analyze(g, options)));
      },
      py::arg("graph"), py::arg("threads") = 0, py::arg("spectral_cap") = 100,
      py::arg("include_polynomial") = false, "Full report as a dict, same shape as the CLI JSON output.");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "oddspec/analysis.hpp"
#include "oddspec/bounds.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/graph6.hpp"
#include "oddspec/interlacing.hpp"
#include "oddspec/spectral.hpp"

#ifndef ODDSPEC_VERSION
#define ODDSPEC_VERSION "0.0.0-dev"
#endif

namespace py = pybind11;
using namespace oddspec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral bipartiteness measures versus odd girth";
    m.attr("__version__") = ODDSPEC_VERSION;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("u"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("u"))
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("generate_cycle", &generate_cycle, py::arg("k"));
    m.def("generate_complete", &generate_complete, py::arg("n"));
    m.def("generate_cayley_f2", &generate_cayley_f2, py::arg("m"), py::arg("generators"));
    m.def("generate_hypercube", &generate_hypercube, py::arg("d"));
    m.def("generate_folded_cube", &generate_folded_cube, py::arg("d"));

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
    m.def("write_graph6", &write_graph6, py::arg("g"));

    m.def(
        "odd_girth",
        [](const Graph& g) -> py::object {
            const OddGirth og = odd_girth(g);
            if (og.is_infinite()) return py::none();
            return py::int_(og.value());
        },
        py::arg("g"), "Shortest odd cycle length; None for bipartite graphs.");
    m.def("is_bipartite", &is_bipartite, py::arg("g"));
    m.def("connected_components", &connected_components, py::arg("g"));
    m.def("is_independent_set", &is_independent_set, py::arg("g"), py::arg("s"));
    m.def("d2_oracle", &d2_oracle, py::arg("g"),
          "Exact edge-bipartization distance (exhaustive, n <= 24).");

    m.def(
        "adjacency_spectrum",
        [](const Graph& g) { return adjacency_spectrum(g).values(); }, py::arg("g"),
        "All adjacency eigenvalues, descending.");
    m.def(
        "signless_laplacian_spectrum",
        [](const Graph& g) { return signless_laplacian_spectrum(g).values(); }, py::arg("g"));
    m.def(
        "perron_vector",
        [](const Graph& g) {
            const PerronVector p = perron_vector(g);
            return py::make_tuple(p.entries, p.lambda1);
        },
        py::arg("g"), "Positive unit lambda1-eigenvector and lambda1, as a pair.");
    m.def("heavy_vertex", &heavy_vertex, py::arg("g"),
          "Vertex whose neighborhood carries the most Perron weight.");

    m.def("find_x0", &find_x0, py::arg("ell"));
    m.def("lambert_w", &lambert_w, py::arg("x"));
    m.def(
        "root_bound", [](int ell) { return root_bound(ell).value; }, py::arg("ell"));
    m.def(
        "lambert_upper_bound", [](int k) { return lambert_upper_bound(k).value; }, py::arg("k"));
    m.def(
        "cycle_lower_bound", [](int k) { return cycle_lower_bound(k).value; }, py::arg("k"));
    m.def("girth7_upper_bound", [] { return girth7_upper_bound().value; });
    m.def("upper_bound_for_odd_girth", &upper_bound_for_odd_girth, py::arg("k"));
    m.def("round_up_4", &round_up_4, py::arg("v"));
    m.def("round_down_4", &round_down_4, py::arg("v"));

    m.def(
        "gamma_table",
        [](int k_max) {
            py::list rows;
            for (const GammaTableRow& r : gamma_table(k_max)) {
                py::dict d;
                d["odd_girth"] = r.odd_girth_k;
                d["upper"] = r.upper;
                d["upper_rounded"] = round_up_4(r.upper);
                d["upper_witness"] = r.upper_witness;
                d["lower"] = r.lower;
                d["lower_rounded"] = round_down_4(r.lower);
                d["lower_witness"] = r.lower_witness;
                rows.append(std::move(d));
            }
            return rows;
        },
        py::arg("k_max") = 15,
        "Best-known upper/lower bounds per odd girth, with 4-decimal renderings.");

    m.def(
        "analyze_json",
        [](const Graph& g, const std::string& graph_id, int max_n) {
            return record_to_json(analyze_graph(g, graph_id, max_n));
        },
        py::arg("g"), py::arg("graph_id") = "graph", py::arg("max_n") = kDefaultMaxN);
    m.def(
        "girth7_certificate_json",
        [](const Graph& g) { return certificate_to_json(girth7_certificate(g)); }, py::arg("g"));
    m.def(
        "independent_set_weight_json",
        [](const Graph& g, const std::vector<int>& s) {
            return certificate_to_json(independent_set_weight_check(g, s));
        },
        py::arg("g"), py::arg("s"));
    m.def(
        "interlacing_json",
        [](const Graph& g, const std::vector<std::vector<int>>& classes) {
            return certificate_to_json(check_interlacing(g, build_quotient(g, classes)));
        },
        py::arg("g"), py::arg("classes"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flowpoly/cli.hpp"
#include "flowpoly/ctseries.hpp"
#include "flowpoly/dkk.hpp"
#include "flowpoly/formulas.hpp"
#include "flowpoly/refine.hpp"
#include "flowpoly/serialize.hpp"
#include "flowpoly/verify.hpp"
#include "flowpoly/volumes.hpp"

namespace py = pybind11;
using namespace flowpoly;

namespace {

py::object to_py(const BigInt& x) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

py::object to_py(const BigRational& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(BigInt(numerator(x))), to_py(BigInt(denominator(x))));
}

}  // namespace

PYBIND11_MODULE(_flowpoly, m) {
    m.doc() = "Flow polytopes, Kostant partition functions and the Morris constant term";

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> es;
                 for (auto [t, h] : edges) es.push_back({t, h});
                 return Multigraph(n, std::move(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Multigraph::n)
        .def_property_readonly("edges",
                               [](const Multigraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.tail, e.head);
                                   return out;
                               })
        .def("edge_count", &Multigraph::edge_count)
        .def("to_json", [](const Multigraph& g) { return graph_to_json(g).dump(); })
        .def("__eq__", [](const Multigraph& g, const Multigraph& h) { return g == h; })
        .def("__repr__", [](const Multigraph& g) {
            return "Multigraph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("build_kabc", &build_kabc, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("build_kabc_S", &build_kabc_S, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("S"));
    m.def("build_complete", &build_complete, py::arg("n"));
    m.def("build_Gpq", &build_Gpq, py::arg("p"), py::arg("q"));
    m.def("random_graph", &random_graph, py::arg("seed"), py::arg("max_edges") = 9);
    m.def("reverse", &reverse);
    m.def("parse_graph_spec", &parse_graph_spec, py::arg("spec"));

    m.def("kpf", [](const Multigraph& g, const NetFlow& a) { return to_py(kpf(g, a)); }, py::arg("g"), py::arg("netflow"));
    m.def("enumerate_flows", &enumerate_flows, py::arg("g"), py::arg("netflow"));
    m.def("indegree_netflow", &indegree_netflow);
    m.def("volume_via_kpf", [](const Multigraph& g) { return to_py(volume_via_kpf(g)); });
    m.def("volume_via_subdivision", [](const Multigraph& g) { return to_py(volume_via_subdivision(g)); });
    m.def("ehrhart_volume", [](const Multigraph& g, const NetFlow& a) { return to_py(ehrhart_volume(g, a)); });
    m.def("lidskii_volume", [](const Multigraph& g, const NetFlow& a) { return to_py(lidskii_volume(g, a)); });

    m.def("morris", [](int n, int a, int b, int c) { return to_py(morris(n, a, b, c)); });
    m.def("psi_product", [](int n, int k, int a, int b, int c) { return to_py(psi_product(n, k, a, b, c)); });
    m.def("phi_product", [](int n, int k, int a, int b, int c) { return to_py(phi_product(n, k, a, b, c)); });
    m.def("phi_scaled", [](int n, int k, int a, int b, int c) { return to_py(phi_scaled(n, k, a, b, c)); });
    m.def("morris_via_kpf", [](int n, int a, int b, int c) { return to_py(morris_via_kpf(n, a, b, c)); });
    m.def("psi_via_kpf", [](int n, int k, int a, int b, int c) { return to_py(psi_via_kpf(n, k, a, b, c)); });
    m.def("psi_via_volumes", [](int n, int k, int a, int b, int c) { return to_py(psi_via_volumes(n, k, a, b, c)); });
    m.def("phi_via_kpf", [](int n, int k, int a, int b, int c) { return to_py(phi_via_kpf(n, k, a, b, c)); });
    m.def("ct_morris", [](int n, int a, int b, int c) { return to_py(ct_morris(n, a, b, c)); });
    m.def("ct_psi", [](int n, int k, int a, int b, int c) { return to_py(ct_psi(n, k, a, b, c)); });
    m.def("ct_phi", [](int n, int k, int a, int b, int c) { return to_py(ct_phi(n, k, a, b, c)); });

    m.def("max_cliques", [](const Multigraph& g) { return max_cliques(g, default_framing(g)); });
    m.def("theta_pairs", [](const Multigraph& g) { return theta_pairs(g, default_framing(g)); });

    // Report as a JSON string; the Python wrapper decodes it.
    m.def("_verify", [](const std::string& suite, const std::string& grid) {
        return report_to_json(run_suite(suite, parse_grid(grid))).dump();
    });
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}

#include <folklab/arrowing.hh>
#include <folklab/certifier.hh>
#include <folklab/clique.hh>
#include <folklab/expr.hh>
#include <folklab/registry.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace folklab;

namespace
{
    auto make_budget(std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds, int workers) -> SearchBudget
    {
        SearchBudget b;
        b.max_nodes = max_nodes;
        if (max_seconds)
            b.max_time = std::chrono::milliseconds(static_cast<long long>(*max_seconds * 1000));
        b.workers = workers;
        return b;
    }

    auto verdict_dict(const ArrowVerdict & v) -> std::string
    {
        return verdict_json(v, true).dump();
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Arrowing, clique and certification kernels";
    m.attr("__version__") = tool_version;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_RuntimeError);
    py::register_exception<UnknownValueError>(m, "UnknownValueError", PyExc_KeyError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", [] (int n, const std::vector<std::pair<int, int>> & edges) {
                std::vector<Edge> es;
                for (auto [u, v] : edges)
                    es.push_back(Edge{std::min(u, v), std::max(u, v)});
                return Graph::from_edges(n, es);
            }, py::arg("order"), py::arg("edges"))
        .def_static("from_graph6", [] (const std::string & s) { return parse_graph6(s); })
        .def_static("from_expression", [] (const std::string & s) { return parse_expression(s); })
        .def_property_readonly("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", [] (const Graph & g) {
                std::vector<std::pair<int, int>> out;
                for (auto & e : g.edges())
                    out.emplace_back(e.u, e.v);
                return out;
            })
        .def("graph6", [] (const Graph & g) { return emit_graph6(g); })
        .def("clique_number", [] (const Graph & g) { return clique_number(g).size; })
        .def("independence_number", [] (const Graph & g) { return independence_number(g).size; })
        .def("max_clique", [] (const Graph & g) { return clique_number(g).witness.members(); })
        .def("__eq__", [] (const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [] (const Graph & g) {
                return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
            });

    m.def("q_graph", [] { return reconstruct_q().graph; }, "The validated 13-vertex graph Q");

    m.def("arrows_json", [] (const std::string & mode, const Graph & g, const std::vector<int> & tuple,
                std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds, int workers) {
            Mode md = mode == "vertex" ? Mode::vertex : mode == "edge" ? Mode::edge
                : throw DomainError("mode must be 'vertex' or 'edge'");
            return verdict_dict(decide(md, g, ArrowTuple{tuple}, make_budget(max_nodes, max_seconds, workers)));
        }, py::arg("mode"), py::arg("graph"), py::arg("tuple"), py::arg("max_nodes") = py::none(),
        py::arg("max_seconds") = py::none(), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def("oracle_json", [] (const std::string & mode, const Graph & g, const std::vector<int> & tuple) {
            Mode md = mode == "vertex" ? Mode::vertex : Mode::edge;
            return verdict_dict(decide_with_oracle(g, ArrowTuple{tuple}, md));
        }, py::arg("mode"), py::arg("graph"), py::arg("tuple"));

    m.def("cnf", [] (const std::string & mode, const Graph & g, const std::vector<int> & tuple) {
            return export_cnf(g, ArrowTuple{tuple}, mode == "vertex" ? Mode::vertex : Mode::edge).to_dimacs();
        }, py::arg("mode"), py::arg("graph"), py::arg("tuple"));

    m.def("registry_json", [] () {
            auto r = Registry::from_environment();
            json entries = json::array();
            for (auto & e : r.entries())
                entries.push_back(e.to_json());
            return json{{"registry-snapshot-hash", r.snapshot_hash()}, {"entries", entries}}.dump();
        });

    m.def("certify_theorem1_json", [] (int a, int alpha, std::optional<std::string> u,
                std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds, int workers) {
            TheoremInstance inst;
            inst.a = a;
            inst.alpha = alpha;
            inst.u_label = u.value_or("Q");
            inst.u = u ? parse_expression(*u, [] { return reconstruct_q().graph; }) : reconstruct_q().graph;
            return certify_theorem1(inst, Registry::from_environment(), make_budget(max_nodes, max_seconds, workers)).to_json().dump();
        }, py::arg("a"), py::arg("alpha") = 0, py::arg("u") = py::none(), py::arg("max_nodes") = 100'000'000,
        py::arg("max_seconds") = 60.0, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
}

#include "cacti/api.hpp"
#include "cacti/homology.hpp"
#include "cacti/operad.hpp"
#include "cacti/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cacti;
using nlohmann::json;

namespace {

Tree tree_of(const std::string& s)
{
    Tree t = parse_tree(s);
    validate(t);
    return t;
}

} // namespace

// JSON travels as text; the Python package decodes it.
PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cellular chains of cacti and their action on Hochschild cochains";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
    py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<SuiteError>(m, "SuiteError", PyExc_ValueError);

    m.def("normalize_tree", [](const std::string& s) { return serialize(tree_of(s)); });
    m.def("degree", [](const std::string& s) { return degree(tree_of(s)); });
    m.def("enumerate_cells", [](int n, int max_degree, bool spineless) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_cells(n, max_degree, spineless)) out.push_back(serialize(t));
        return out;
    }, py::arg("n"), py::arg("max_degree"), py::arg("spineless") = false);
    m.def("boundary", [](const std::string& s) { return to_json(boundary(tree_of(s))).dump(); });
    m.def("boundary_chain", [](const std::string& j) { return to_json(boundary(chain_from_json(json::parse(j)))).dump(); });
    m.def("compose", [](const std::string& a, int i, const std::string& b) {
        const Tree t = tree_of(a);
        if (i < 1 || i > label_count(t)) throw py::index_error("slot out of range");
        return to_json(compose(t, i, tree_of(b))).dump();
    });
    m.def("act", [](const std::string& t, const std::string& cochains, const std::string& algebra) {
        return to_json(act(tree_of(t), api::cochains_from_json(json::parse(cochains), algebra))).dump();
    }, py::arg("tree"), py::arg("cochains"), py::arg("algebra") = "");
    m.def("correlate", [](const std::string& t, const std::string& inputs, const std::string& algebra) {
        return to_string(api::correlate_inputs(tree_of(t), json::parse(inputs), algebra));
    }, py::arg("tree"), py::arg("inputs"), py::arg("algebra") = "");
    m.def("hh_op", [](const std::string& op, const std::string& cochains, const std::string& algebra) {
        return to_json(api::hh_op(op, api::cochains_from_json(json::parse(cochains), algebra))).dump();
    }, py::arg("op"), py::arg("cochains"), py::arg("algebra") = "");
    m.def("hh", [](const std::string& algebra, int degree) { return api::hh_summary(algebra, degree).dump(); });
    m.def("algebra", [](const std::string& spec) { return to_json(*load_algebra(spec)).dump(); });
    m.def("random_cochain", [](const std::string& algebra, int arity, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return to_json(random_cochain(load_algebra(algebra), arity, rng)).dump();
    });
    m.def("homology", [](int n, bool spineless) { return to_json(cellular_homology(n, spineless)).dump(); },
          py::arg("n"), py::arg("spineless") = false);
    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name, int n, int max_degree, const std::string& algebra, std::uint64_t seed,
                          int trials) {
        SuiteReport r;
        {
            py::gil_scoped_release release;
            r = run_suite(name, {n, max_degree, algebra, seed, trials});
        }
        return to_json(r).dump();
    }, py::arg("name"), py::arg("n") = 0, py::arg("max_degree") = -1, py::arg("algebra") = "", py::arg("seed") = 1,
          py::arg("trials") = 0);
    m.def("graph_from_tree", [](const std::string& t) { return format_graph(cactus_graph(tree_of(t))); });
    m.def("dual_tree", [](const std::string& g) { return serialize(dual_tree(parse_graph(g))); });
    m.def("graph_info", [](const std::string& g) { return api::graph_info(parse_graph(g)).dump(); });
    m.def("contract_edge", [](const std::string& g, int flag) { return format_graph(contract_edge(parse_graph(g), flag)); });
}

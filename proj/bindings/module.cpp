#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "perc/graph.hpp"
#include "perc/percolation.hpp"
#include "perc/sssp.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace perc;

namespace {

PercolationStates to_states(const std::vector<double>& x) { return PercolationStates{x}; }

RunConfig make_config(double epsilon, double delta, double c, std::uint64_t seed, int workers) {
    return RunConfig{epsilon, delta, c, seed, workers};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Percolation centrality estimation via shortest-path sampling";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def_property_readonly("directed", &Graph::directed)
        .def_property_readonly("weighted", &Graph::weighted)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<int, int, double>> out;
                 out.reserve(g.edges().size());
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
                 return out;
             })
        .def("neighbors",
             [](const Graph& g, int v) {
                 if (v < 0 || v >= g.num_vertices())
                     throw std::out_of_range("vertex out of range");
                 std::vector<std::pair<int, double>> out;
                 for (const Neighbor& e : g.neighbors(v)) out.emplace_back(e.to, e.weight);
                 return out;
             },
             "v"_a)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges()
               << (g.directed() ? ", directed" : ", undirected") << ")";
            return ss.str();
        });

    py::class_<CentralityEstimates>(m, "CentralityEstimates")
        .def_readonly("values", &CentralityEstimates::values)
        .def_readonly("r", &CentralityEstimates::r)
        .def_readonly("vd_bound", &CentralityEstimates::vd_bound)
        .def_readonly("seed", &CentralityEstimates::seed)
        .def_property_readonly("kind",
                               [](const CentralityEstimates& e) {
                                   return e.kind == EstimateKind::estimated ? "estimated"
                                                                            : "exact";
                               })
        .def("__repr__", [](const CentralityEstimates& e) {
            std::ostringstream ss;
            ss << "CentralityEstimates(n=" << e.values.size() << ", kind="
               << (e.kind == EstimateKind::estimated ? "estimated" : "exact") << ")";
            return ss.str();
        });

    m.def(
        "load_edge_list",
        [](const std::string& path, bool directed, bool weighted) {
            return load_edge_list_file(path, directed, weighted);
        },
        "path"_a, "directed"_a = false, "weighted"_a = false,
        "Read a '#'-commented edge-list file (\"u v\" or \"u v w\" lines).");
    m.def(
        "parse_edge_list",
        [](const std::string& text, bool directed, bool weighted) {
            std::istringstream in(text);
            return load_edge_list(in, directed, weighted);
        },
        "text"_a, "directed"_a = false, "weighted"_a = false);
    m.def(
        "save_edge_list",
        [](const Graph& g) {
            std::ostringstream out;
            save_edge_list(g, out);
            return out.str();
        },
        "g"_a);

    m.def("barabasi_albert", &generate_barabasi_albert, "n"_a, "m_attach"_a, "seed"_a = 1);
    m.def(
        "random_states",
        [](int n, std::uint64_t seed) { return assign_random_states(n, seed).x; },
        "n"_a, "seed"_a);
    m.def(
        "load_states",
        [](const std::string& path, int n) { return load_states_file(path, n).x; },
        "path"_a, "n"_a);
    m.def(
        "parse_states",
        [](const std::string& text, int n) {
            std::istringstream in(text);
            return load_states(in, n).x;
        },
        "text"_a, "n"_a);

    m.def("vertex_diameter_bound", &approximate_vertex_diameter, "g"_a, "seed"_a = 1);
    m.def(
        "sample_size",
        [](double epsilon, double delta, int vd_bound, double c) {
            return sample_size(make_config(epsilon, delta, c, 1, 1), vd_bound);
        },
        "epsilon"_a, "delta"_a, "vd_bound"_a, "c"_a = 0.5);
    m.def(
        "percolation_differences",
        [](const std::vector<double>& sorted_states) {
            DifferenceSums sums = percolation_differences(sorted_states);
            return py::make_tuple(sums.total, sums.exclusive);
        },
        "sorted_states"_a, "Returns (total, exclusive) for a non-decreasing array.");
    m.def(
        "exclusive_sums",
        [](const std::vector<double>& states) {
            DifferenceSums sums = exclusive_sums_by_vertex(to_states(states));
            return py::make_tuple(sums.total, sums.exclusive);
        },
        "states"_a);

    m.def(
        "estimate",
        [](const Graph& g, const std::vector<double>& states, double epsilon, double delta,
           double c, std::uint64_t seed, int workers) {
            return estimate_percolation(g, to_states(states),
                                        make_config(epsilon, delta, c, seed, workers));
        },
        "g"_a, "states"_a, "epsilon"_a = 0.1, "delta"_a = 0.1, "c"_a = 0.5, "seed"_a = 1,
        "workers"_a = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "exact",
        [](const Graph& g, const std::vector<double>& states, int workers) {
            return exact_percolation(g, to_states(states), workers);
        },
        "g"_a, "states"_a, "workers"_a = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "brute_force",
        [](const Graph& g, const std::vector<double>& states, int max_vertices) {
            return brute_force_percolation(g, to_states(states), max_vertices);
        },
        "g"_a, "states"_a, "max_vertices"_a = 10);
}

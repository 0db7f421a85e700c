#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaindex/decomposition.hpp"
#include "chaindex/generators.hpp"
#include "chaindex/graph.hpp"
#include "chaindex/io.hpp"
#include "chaindex/reach_index.hpp"
#include "chaindex/reduction.hpp"
#include "chaindex/width.hpp"

namespace py = pybind11;
using namespace chaindex;

namespace {

std::vector<std::pair<int, int>> dag_edges(const Dag& d) {
    std::vector<std::pair<int, int>> e;
    e.reserve(d.edge_count());
    for (int u = 0; u < d.n; ++u)
        for (int v : d.out_adj[u]) e.emplace_back(u, v);
    return e;
}

}  // namespace

PYBIND11_MODULE(_chaindex, m) {
    m.doc() = "Chain-decomposition reachability toolkit for DAGs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    py::class_<Dag>(m, "Dag")
        .def_readonly("n", &Dag::n)
        .def_property_readonly("edge_count", [](const Dag& d) { return d.edge_count(); })
        .def("edges", &dag_edges)
        .def("out_adj", [](const Dag& d, int v) { return d.out_adj.at(v); })
        .def("in_adj", [](const Dag& d, int v) { return d.in_adj.at(v); })
        .def("topo_rank", [](const Dag& d, int v) { return d.topo_rank.at(v); })
        .def("__repr__", [](const Dag& d) {
            return "<Dag n=" + std::to_string(d.n) + " m=" + std::to_string(d.edge_count()) + ">";
        });

    py::class_<ChainDecomposition>(m, "ChainDecomposition")
        .def_property_readonly("k_c", &ChainDecomposition::k_c)
        .def_readonly("chains", &ChainDecomposition::chains)
        .def("chain_of", [](const ChainDecomposition& d, int v) { return d.chain_of.at(v); })
        .def("pos_of", [](const ChainDecomposition& d, int v) { return d.pos_of.at(v); });

    py::class_<ConcatStats>(m, "ConcatStats")
        .def_readonly("k_p", &ConcatStats::k_p)
        .def_readonly("k_c", &ConcatStats::k_c)
        .def_readonly("concatenations", &ConcatStats::concatenations)
        .def_readonly("total_path_len", &ConcatStats::total_path_len);

    py::class_<ReductionStats>(m, "ReductionStats")
        .def_readonly("removed_out", &ReductionStats::removed_out)
        .def_readonly("removed_in", &ReductionStats::removed_in)
        .def_readonly("remaining", &ReductionStats::remaining);

    py::class_<ReachIndex>(m, "ReachIndex")
        .def_readonly("n", &ReachIndex::n)
        .def_readonly("k_c", &ReachIndex::k_c)
        .def_readonly("e_tr", &ReachIndex::e_tr)
        .def_readonly("e_red", &ReachIndex::e_red)
        .def("query", &ReachIndex::query)
        .def("chain_of", [](const ReachIndex& ix, int v) { return ix.chain_of.at(v); })
        .def("pos_of", [](const ReachIndex& ix, int v) { return ix.pos_of.at(v); })
        .def("row", [](const ReachIndex& ix, int v) {
            if (v < 0 || v >= ix.n) throw py::index_error();
            return std::vector<std::uint32_t>(ix.row(v), ix.row(v) + ix.k_c);
        });

    py::class_<WidthResult>(m, "WidthResult")
        .def_readonly("width", &WidthResult::width)
        .def_readonly("chains", &WidthResult::chains)
        .def_readonly("index_ms", &WidthResult::index_ms)
        .def_readonly("bipartite_ms", &WidthResult::bipartite_ms)
        .def_readonly("matching_ms", &WidthResult::matching_ms);

    m.def(
        "from_edge_list",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            return to_dag(from_edge_list(n, edges));
        },
        py::arg("n"), py::arg("edges"),
        "Build a DAG from an edge list (self-loops and duplicates dropped); raises on cycles.");
    m.def(
        "condense_sccs",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            CondensationResult r = condense_sccs(from_edge_list(n, edges));
            return py::make_tuple(std::move(r.dag), std::move(r.component_of), r.component_count);
        },
        py::arg("n"), py::arg("edges"),
        "Collapse strongly connected components; returns (dag, component_of, count).");
    m.def("sort_adjacency_lists", &sort_adjacency_lists);
    m.def("dfs_reachable", &dfs_reachable, py::arg("dag"), py::arg("source"));
    m.def("node_order_paths", &node_order_paths);
    m.def("greedy_chains", &greedy_chains,
          "Chain decomposition via the node-order heuristic with inline concatenation.");
    m.def("concatenate", &concatenate, py::arg("dag"), py::arg("chains"));
    m.def("decomposition_from_chains", &decomposition_from_chains);
    m.def("reduce", &reduce, py::arg("dag"), py::arg("chains"));
    m.def("reduce_outgoing", &reduce_outgoing);
    m.def("reduce_incoming", &reduce_incoming);
    m.def(
        "build_index",
        [](const Dag& d, const ChainDecomposition& dec) { return build_index(d, dec); },
        py::arg("dag"), py::arg("chains"));
    m.def("fulkerson_width", &fulkerson_width);
    m.def("gen_er", &gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_ba", &gen_ba, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("gen_ws", &gen_ws, py::arg("n"), py::arg("k"), py::arg("b"), py::arg("seed"));
    m.def("gen_pb", &gen_pb, py::arg("n"), py::arg("paths"), py::arg("avg_degree"),
          py::arg("seed"));
    m.def("er_p_for_degree", &er_p_for_degree);
    m.def("load_edge_list", &load_edge_list);
    m.def("save_edge_list", &save_edge_list, py::arg("path"), py::arg("dag"),
          py::arg("header_comment") = "");
    m.def("save_index", &save_index);
    m.def("load_index", &load_index);

#ifdef CHAINDEX_VERSION
    m.attr("__version__") = CHAINDEX_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}

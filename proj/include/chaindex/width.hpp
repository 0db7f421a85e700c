#pragma once

#include <vector>

#include "chaindex/decomposition.hpp"
#include "chaindex/graph.hpp"
#include "chaindex/reach_index.hpp"

namespace chaindex {

// Bipartite graph on two copies of the vertex set; (x_i, y_j) is an edge iff
// i != j and i reaches j.
struct BipartiteGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // x-side -> y-neighbors
};

struct Matching {
    std::vector<int> match_x;  // partner on the y side, -1 if unmatched
    std::vector<int> match_y;
    int size = 0;
};

struct WidthResult {
    int width = 0;
    ChainDecomposition chains;  // exactly `width` chains
    long long index_ms = 0;     // sort + decomposition + index build
    long long bipartite_ms = 0;
    long long matching_ms = 0;
    long long total_ms() const { return index_ms + bipartite_ms + matching_ms; }
};

// Enumerates the closure row by row with n^2 constant-time queries.
BipartiteGraph build_bipartite(const ReachIndex& ix);

// Maximum-cardinality bipartite matching, layered BFS + augmenting DFS.
Matching hopcroft_karp(const BipartiteGraph& b);

// Width of the DAG as n - |M| for a maximum matching M on the reachability
// bipartite graph, with a minimum chain decomposition read off the matching:
// vertices unmatched on the y side start chains and match_x acts as the
// successor function.
WidthResult fulkerson_width(const Dag& d);

}  // namespace chaindex

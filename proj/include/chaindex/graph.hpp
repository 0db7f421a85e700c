#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chaindex {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    ParseError(const std::string& msg, int line_no)
        : InputError("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// Raised when an operation that requires a DAG meets a cycle. `witness` is a
// vertex that lies on some cycle.
struct CycleError : std::runtime_error {
    explicit CycleError(int v)
        : std::runtime_error("graph contains a cycle through vertex " + std::to_string(v)),
          witness(v) {}
    int witness;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw directed graph as loaded: self-loops and duplicate edges are dropped at
// construction, with counts kept for reporting.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int dropped_self_loops = 0;
    int dropped_duplicates = 0;
};

Digraph from_edge_list(int n, const std::vector<std::pair<int, int>>& raw);

// Immutable DAG: adjacency both ways plus a topological rank per vertex
// (a permutation of [0,n) with rank[u] < rank[v] for every edge (u,v)).
// in_adj is always the exact transpose of out_adj.
struct Dag {
    int n = 0;
    std::vector<std::vector<int>> out_adj;
    std::vector<std::vector<int>> in_adj;
    std::vector<int> topo_rank;

    std::size_t edge_count() const;
    // order such that order[r] is the vertex with topological rank r
    std::vector<int> vertices_by_rank() const;
};

struct CondensationResult {
    Dag dag;                        // one supernode per strongly connected component
    std::vector<int> component_of;  // original vertex -> supernode id
    int component_count = 0;
};

// Collapses strongly connected components into supernodes (Tarjan, iterative).
// Supernodes are numbered in topological order, so dag.topo_rank is the identity.
CondensationResult condense_sccs(const Digraph& g);

// Topological sort via a source queue; ties among available vertices go to the
// lowest vertex id. Throws CycleError if g is not acyclic.
Dag to_dag(const Digraph& g);

// Rebuilds every adjacency list in ascending topological order using one
// reverse-topological sweep that pushes each vertex onto its predecessors'
// stacks. Linear in n + |E|. in_adj is rebuilt sorted as well.
Dag sort_adjacency_lists(const Dag& d);

// All vertices reachable from s, including s itself, ascending by id.
std::vector<int> dfs_reachable(const Dag& d, int s);

// Packed n x n boolean matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
          bits_(words_ * static_cast<std::size_t>(n), 0) {}

    int size() const { return n_; }
    bool get(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >>
                (static_cast<unsigned>(j) & 63u)) & 1u;
    }
    void set(int i, int j) {
        bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (static_cast<unsigned>(j) & 63u);
    }
    std::size_t count() const;
    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Row s = dfs_reachable(d, s). O(|V| * |E|): one graph traversal per source.
// Kept deliberately simple; this is the reference solution the index is
// benchmarked against.
BitMatrix transitive_closure_baseline(const Dag& d);

}  // namespace chaindex

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaindex/decomposition.hpp"
#include "chaindex/graph.hpp"

namespace chaindex {

// Constant-time reachability index over a chain decomposition. Each vertex
// stores, for every chain, the lowest (earliest) position of that chain it can
// reach; 0 is the unreachable sentinel (real positions are 1-based). A vertex
// s reaches t iff row(s)[chain_of(t)] is nonzero and <= pos_of(t), which the
// sentinel choice reduces to one unsigned comparison.
struct ReachIndex {
    int n = 0;
    int k_c = 0;
    std::vector<int> chain_of;
    std::vector<int> pos_of;
    std::vector<std::uint32_t> idx;  // n rows of k_c entries, row-major
    long long e_tr = 0;              // edges skipped as transitive during the build
    long long e_red = 0;             // edges merged; always e_tr + e_red = |E|

    bool query_unchecked(int s, int t) const {
        std::uint32_t entry = idx[static_cast<std::size_t>(s) * k_c + chain_of[t]];
        return entry - 1u < static_cast<std::uint32_t>(pos_of[t]);
    }
    // Bounds-checked query; throws InputError on out-of-range vertices.
    bool query(int s, int t) const;

    std::pair<long long, long long> edge_classification() const { return {e_tr, e_red}; }

    const std::uint32_t* row(int v) const { return idx.data() + static_cast<std::size_t>(v) * k_c; }
};

// Builds the index in one reverse-topological sweep. Per vertex, successors
// are consumed in ascending topological order (throws PreconditionError on a
// descending pair); an edge whose target position is already covered by the
// row is transitive and skipped, every other edge triggers a k_c-entry
// pairwise-minimum merge. O(|E_tr| + k_c * |E_red|) time, O(k_c * n) space.
// When `transitive_edges` is non-null the skipped edges are appended to it.
ReachIndex build_index(const Dag& d, const ChainDecomposition& dec,
                       std::vector<std::pair<int, int>>* transitive_edges = nullptr);

// Expands the index into the full closure matrix, one query per entry.
BitMatrix to_closure_matrix(const ReachIndex& ix);

}  // namespace chaindex

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chaindex/graph.hpp"

namespace chaindex {

// Vertex-disjoint chains covering all vertices. Within a chain, topological
// rank strictly increases and every vertex reaches its successor. Positions
// are 1-based.
struct ChainDecomposition {
    std::vector<std::vector<int>> chains;
    std::vector<int> chain_of;
    std::vector<int> pos_of;

    int k_c() const { return static_cast<int>(chains.size()); }
};

// Builds the per-vertex labels from explicit chains. Checks that the chains
// partition the vertices and ascend in topological rank; reachability between
// consecutive vertices is the caller's responsibility.
ChainDecomposition decomposition_from_chains(const Dag& d, std::vector<std::vector<int>> chains);

struct LookupResult {
    std::vector<int> blocked;  // newly exhausted vertices, in visit order
    std::vector<int> path;     // found chain tail ... start, empty if none
};

struct ConcatStats {
    int k_p = 0;                   // chains before concatenation
    int k_c = 0;                   // chains after
    int concatenations = 0;        // always k_p - k_c
    long long total_path_len = 0;  // vertices on all found connecting paths
};

// Depth-first search over incoming edges from `start`, looking for the first
// vertex (other than start) that satisfies `is_chain_tail`. Vertices already
// in `globally_blocked` are still tested against the predicate but never
// expanded. On success the connecting path is returned and stays available;
// every other visited vertex is added to `globally_blocked`, so repeated
// lookups sharing one blocked set cost linear time in total.
template <class IsChainTail>
LookupResult reversed_dfs_lookup(const Dag& d, int start, IsChainTail is_chain_tail,
                                 std::vector<char>& globally_blocked) {
    LookupResult out;
    std::vector<std::pair<int, std::size_t>> frames;  // vertex, next in_adj slot
    std::vector<int> visited;

    globally_blocked[start] = 1;
    visited.push_back(start);
    frames.emplace_back(start, 0);

    while (!frames.empty()) {
        auto& [v, next] = frames.back();
        const std::vector<int>& preds = d.in_adj[v];
        if (next == preds.size()) {
            frames.pop_back();
            continue;
        }
        int u = preds[next++];
        if (u != start && is_chain_tail(u)) {
            out.path.reserve(frames.size() + 1);
            out.path.push_back(u);
            for (auto it = frames.rbegin(); it != frames.rend(); ++it) out.path.push_back(it->first);
            break;
        }
        if (globally_blocked[u]) continue;
        globally_blocked[u] = 1;
        visited.push_back(u);
        frames.emplace_back(u, 0);
    }

    if (out.path.empty()) {
        out.blocked = std::move(visited);
    } else {
        // vertices on the connecting path stay traversable for later lookups
        for (std::size_t i = 1; i < out.path.size(); ++i) globally_blocked[out.path[i]] = 0;
        for (int v : visited)
            if (globally_blocked[v]) out.blocked.push_back(v);
    }
    return out;
}

// Node-order path decomposition: scan vertices in ascending topological order,
// appending each to a path whose last vertex is an immediate predecessor, else
// opening a new path. Consecutive path vertices are always joined by an edge.
ChainDecomposition node_order_paths(const Dag& d);

// Turns any chain decomposition into one with no remaining concatenation:
// for each chain head, a reversed DFS lookup searches the unexhausted
// ancestors for another chain's tail and merges on success. Blocked sets
// persist across lookups. O(|E| + total connecting path length).
std::pair<ChainDecomposition, ConcatStats> concatenate(const Dag& d,
                                                       const ChainDecomposition& chains);

// Combined heuristic: node-order scan with two greedy choices (prefer the
// lowest-outdegree immediate predecessor that is a chain tail; after placing a
// vertex, pull in an unassigned immediate successor of in-degree 1) and the
// reversed DFS lookup run inline when no immediate predecessor is available.
// Expects adjacency lists sorted ascending by topological rank.
std::pair<ChainDecomposition, ConcatStats> greedy_chains(const Dag& d);

}  // namespace chaindex

#pragma once

// Brute-force oracles and random-instance helpers shared by the unit and
// acceptance suites. Everything here is independent of the index/reduction
// code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chaindex/decomposition.hpp"
#include "chaindex/generators.hpp"
#include "chaindex/graph.hpp"

namespace testutil {

inline chaindex::Dag make_dag(int n, const std::vector<std::pair<int, int>>& edges) {
    return chaindex::sort_adjacency_lists(chaindex::to_dag(chaindex::from_edge_list(n, edges)));
}

inline chaindex::Dag path_dag(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_dag(n, edges);
}

inline chaindex::Dag complete_dag(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_dag(n, edges);
}

// Reference closure: plain per-source BFS over a char matrix. Rows include the
// source itself.
inline std::vector<std::vector<char>> oracle_closure(const chaindex::Dag& d) {
    std::vector<std::vector<char>> reach(d.n, std::vector<char>(d.n, 0));
    std::vector<int> queue;
    for (int s = 0; s < d.n; ++s) {
        queue.assign(1, s);
        reach[s][s] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int t : d.out_adj[queue[qi]])
                if (!reach[s][t]) {
                    reach[s][t] = 1;
                    queue.push_back(t);
                }
    }
    return reach;
}

// True iff (u,v) has an alternative path of length > 1 (the edge itself does
// not count).
inline bool oracle_edge_transitive(const chaindex::Dag& d, int u, int v,
                                   const std::vector<std::vector<char>>& closure) {
    for (int mid : d.out_adj[u])
        if (mid != v && closure[mid][v]) return true;
    return false;
}

// Maximum antichain by subset enumeration; n must be at most 20.
inline int brute_width(const chaindex::Dag& d) {
    const int n = d.n;
    auto closure = oracle_closure(d);
    std::vector<std::uint32_t> comparable(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (closure[i][j] || closure[j][i]))
                comparable[i] |= std::uint32_t{1} << j;
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if ((s >> i & 1u) && (s & comparable[i])) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Full validity check for a chain decomposition; with `require_edges`,
// consecutive chain vertices must be joined by an actual edge.
inline bool valid_decomposition(const chaindex::Dag& d, const chaindex::ChainDecomposition& dec,
                                bool require_edges = false) {
    std::vector<char> covered(d.n, 0);
    auto closure = oracle_closure(d);
    for (int c = 0; c < dec.k_c(); ++c) {
        const auto& chain = dec.chains[c];
        if (chain.empty()) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            int v = chain[i];
            if (v < 0 || v >= d.n || covered[v]) return false;
            covered[v] = 1;
            if (dec.chain_of[v] != c || dec.pos_of[v] != static_cast<int>(i) + 1) return false;
            if (i > 0) {
                int u = chain[i - 1];
                if (d.topo_rank[u] >= d.topo_rank[v]) return false;
                if (!closure[u][v]) return false;
                if (require_edges &&
                    std::find(d.out_adj[u].begin(), d.out_adj[u].end(), v) == d.out_adj[u].end())
                    return false;
            }
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

// After a correct concatenation pass, no chain's last vertex may reach
// another chain's first vertex.
inline bool concatenation_free(const chaindex::Dag& d, const chaindex::ChainDecomposition& dec) {
    auto closure = oracle_closure(d);
    for (int a = 0; a < dec.k_c(); ++a)
        for (int b = 0; b < dec.k_c(); ++b)
            if (a != b && closure[dec.chains[a].back()][dec.chains[b].front()]) return false;
    return true;
}

// Random DAG spanning all four generator models and a spread of densities,
// steered entirely by (n, seed).
inline chaindex::Dag sample_dag(int n, std::uint64_t seed) {
    using namespace chaindex;
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.seed = seed * 0x9e3779b97f4a7c15ull + 1;
    int model = static_cast<int>(seed % 4);
    int density = static_cast<int>((seed / 4) % 4);
    if (n < 2) model = 0;
    if (model == 2 && n < 3) model = 3;
    switch (model) {
        case 0:
            cfg.model = Model::ER;
            cfg.p = std::vector<double>{0.05, 0.15, 0.4, 0.8}[density];
            break;
        case 1:
            cfg.model = Model::BA;
            cfg.ba_m = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(
                                                       std::min(n - 1, density + 1)));
            break;
        case 2:
            cfg.model = Model::WS;
            cfg.ws_k = std::min(n - 1, 2 * (1 + density));
            if (cfg.ws_k % 2) --cfg.ws_k;
            cfg.ws_k = std::max(cfg.ws_k, 2);
            if (cfg.ws_k >= n) cfg.ws_k = 2;
            cfg.ws_b = std::vector<double>{0.0, 0.2, 0.5, 0.9}[density];
            break;
        default:
            cfg.model = Model::PB;
            cfg.pb_paths = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
            cfg.avg_degree = std::vector<double>{0.0, 0.8, 1.6, 3.0}[density];
            break;
    }
    return sort_adjacency_lists(generate(cfg));
}

}  // namespace testutil

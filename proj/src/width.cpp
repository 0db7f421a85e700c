#include "chaindex/width.hpp"

#include <limits>

#include "chaindex/stopwatch.hpp"

namespace chaindex {

BipartiteGraph build_bipartite(const ReachIndex& ix) {
    BipartiteGraph b;
    b.n = ix.n;
    b.adj.resize(ix.n);
    for (int i = 0; i < ix.n; ++i) {
        auto& row = b.adj[i];
        for (int j = 0; j < ix.n; ++j)
            if (j != i && ix.query_unchecked(i, j)) row.push_back(j);
    }
    return b;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const BipartiteGraph& b;
    std::vector<int> match_x, match_y, dist;
    std::vector<std::size_t> cursor;
    std::vector<int> queue;

    explicit HopcroftKarp(const BipartiteGraph& g)
        : b(g), match_x(g.n, -1), match_y(g.n, -1), dist(g.n), cursor(g.n) {}

    bool bfs() {
        queue.clear();
        for (int x = 0; x < b.n; ++x) {
            if (match_x[x] < 0) {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = kInf;
            }
        }
        bool reachable_free = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y : b.adj[x]) {
                int x2 = match_y[y];
                if (x2 < 0) {
                    reachable_free = true;
                } else if (dist[x2] == kInf) {
                    dist[x2] = dist[x] + 1;
                    queue.push_back(x2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int x) {
        for (std::size_t& i = cursor[x]; i < b.adj[x].size(); ++i) {
            int y = b.adj[x][i];
            int x2 = match_y[y];
            if (x2 < 0 || (dist[x2] == dist[x] + 1 && dfs(x2))) {
                match_x[x] = y;
                match_y[y] = x;
                return true;
            }
        }
        dist[x] = kInf;
        return false;
    }

    Matching run() {
        Matching m;
        m.size = 0;
        while (bfs()) {
            std::fill(cursor.begin(), cursor.end(), 0);
            for (int x = 0; x < b.n; ++x)
                if (match_x[x] < 0 && dfs(x)) ++m.size;
        }
        m.match_x = std::move(match_x);
        m.match_y = std::move(match_y);
        return m;
    }
};

}  // namespace

Matching hopcroft_karp(const BipartiteGraph& b) { return HopcroftKarp(b).run(); }

WidthResult fulkerson_width(const Dag& d) {
    WidthResult res;
    Stopwatch sw;

    Dag sorted = sort_adjacency_lists(d);
    auto [dec, stats] = greedy_chains(sorted);
    ReachIndex ix = build_index(sorted, dec);
    res.index_ms = sw.elapsed_ms();

    sw.restart();
    BipartiteGraph b = build_bipartite(ix);
    res.bipartite_ms = sw.elapsed_ms();

    sw.restart();
    Matching m = hopcroft_karp(b);
    res.matching_ms = sw.elapsed_ms();

    res.width = d.n - m.size;

    // chains: a matched pair (i, j) means i reaches j, so match_x is a
    // successor function; heads are the vertices unmatched on the y side
    std::vector<std::vector<int>> chains;
    for (int head : d.vertices_by_rank()) {
        if (m.match_y[head] >= 0) continue;
        std::vector<int> chain;
        for (int v = head; v >= 0; v = m.match_x[v]) chain.push_back(v);
        chains.push_back(std::move(chain));
    }
    res.chains = decomposition_from_chains(d, std::move(chains));
    return res;
}

}  // namespace chaindex

#include "chaindex/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_set>

namespace chaindex {

std::size_t Dag::edge_count() const {
    std::size_t m = 0;
    for (const auto& a : out_adj) m += a.size();
    return m;
}

std::vector<int> Dag::vertices_by_rank() const {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[topo_rank[v]] = v;
    return order;
}

Digraph from_edge_list(int n, const std::vector<std::pair<int, int>>& raw) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    Digraph g;
    g.n = n;
    g.edges.reserve(raw.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw.size() * 2);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [u, v] = raw[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                             std::to_string(v) + ") has an endpoint outside [0," +
                             std::to_string(n) + ")");
        if (u == v) {
            ++g.dropped_self_loops;
            continue;
        }
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (!seen.insert(key).second) {
            ++g.dropped_duplicates;
            continue;
        }
        g.edges.emplace_back(u, v);
    }
    return g;
}

namespace {

// Iterative Tarjan. Components are emitted sinks-first, so reversing the
// emission order yields a topological order of the condensation.
struct TarjanState {
    std::vector<int> index, lowlink, comp;
    std::vector<char> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;
};

void tarjan_from(int root, const std::vector<std::vector<int>>& adj, TarjanState& st) {
    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> frames{{root, 0}};
    st.index[root] = st.lowlink[root] = st.next_index++;
    st.stack.push_back(root);
    st.on_stack[root] = 1;

    while (!frames.empty()) {
        Frame& f = frames.back();
        int v = f.v;
        if (f.child < adj[v].size()) {
            int w = adj[v][f.child++];
            if (st.index[w] < 0) {
                st.index[w] = st.lowlink[w] = st.next_index++;
                st.stack.push_back(w);
                st.on_stack[w] = 1;
                frames.push_back({w, 0});
            } else if (st.on_stack[w]) {
                st.lowlink[v] = std::min(st.lowlink[v], st.index[w]);
            }
        } else {
            if (st.lowlink[v] == st.index[v]) {
                int c = st.comp_count++;
                int w;
                do {
                    w = st.stack.back();
                    st.stack.pop_back();
                    st.on_stack[w] = 0;
                    st.comp[w] = c;
                } while (w != v);
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().v;
                st.lowlink[parent] = std::min(st.lowlink[parent], st.lowlink[v]);
            }
        }
    }
}

}  // namespace

CondensationResult condense_sccs(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) adj[u].push_back(v);

    TarjanState st;
    st.index.assign(g.n, -1);
    st.lowlink.assign(g.n, 0);
    st.comp.assign(g.n, -1);
    st.on_stack.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (st.index[v] < 0) tarjan_from(v, adj, st);

    // renumber so that supernode id == topological rank
    const int k = st.comp_count;
    CondensationResult res;
    res.component_count = k;
    res.component_of.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.component_of[v] = k - 1 - st.comp[v];

    Dag& dag = res.dag;
    dag.n = k;
    dag.out_adj.resize(k);
    dag.in_adj.resize(k);
    dag.topo_rank.resize(k);
    for (int c = 0; c < k; ++c) dag.topo_rank[c] = c;

    // bucket crossing edges by source supernode (counting sort), then dedup
    // each bucket with a stamp array; everything stays linear in n + |E|
    std::vector<int> bucket_start(k + 1, 0);
    for (auto [u, v] : g.edges) {
        int cu = res.component_of[u], cv = res.component_of[v];
        if (cu != cv) ++bucket_start[cu + 1];
    }
    for (int c = 0; c < k; ++c) bucket_start[c + 1] += bucket_start[c];
    std::vector<int> bucket_target(bucket_start[k]);
    {
        std::vector<int> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (auto [u, v] : g.edges) {
            int cu = res.component_of[u], cv = res.component_of[v];
            if (cu != cv) bucket_target[cursor[cu]++] = cv;
        }
    }
    std::vector<int> stamp(k, -1);
    for (int c = 0; c < k; ++c) {
        for (int i = bucket_start[c]; i < bucket_start[c + 1]; ++i) {
            int t = bucket_target[i];
            if (stamp[t] == c) continue;
            stamp[t] = c;
            dag.out_adj[c].push_back(t);
        }
    }
    for (int c = 0; c < k; ++c)
        for (int t : dag.out_adj[c]) dag.in_adj[t].push_back(c);
    return res;
}

Dag to_dag(const Digraph& g) {
    Dag d;
    d.n = g.n;
    d.out_adj.resize(g.n);
    d.in_adj.resize(g.n);
    d.topo_rank.assign(g.n, -1);
    for (auto [u, v] : g.edges) {
        d.out_adj[u].push_back(v);
        d.in_adj[v].push_back(u);
    }

    std::vector<int> indeg(g.n);
    for (int v = 0; v < g.n; ++v) indeg[v] = static_cast<int>(d.in_adj[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<int>> avail;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) avail.push(v);

    int rank = 0;
    while (!avail.empty()) {
        int v = avail.top();
        avail.pop();
        d.topo_rank[v] = rank++;
        for (int t : d.out_adj[v])
            if (--indeg[t] == 0) avail.push(t);
    }
    if (rank < g.n) {
        // walk backwards through unranked vertices until one repeats
        int v = 0;
        while (d.topo_rank[v] >= 0) ++v;
        std::vector<char> seen(g.n, 0);
        while (!seen[v]) {
            seen[v] = 1;
            for (int u : d.in_adj[v])
                if (d.topo_rank[u] < 0) {
                    v = u;
                    break;
                }
        }
        throw CycleError(v);
    }
    return d;
}

Dag sort_adjacency_lists(const Dag& d) {
    Dag s;
    s.n = d.n;
    s.topo_rank = d.topo_rank;
    s.out_adj.resize(d.n);
    s.in_adj.resize(d.n);

    std::vector<int> fill(d.n);
    for (int v = 0; v < d.n; ++v) {
        s.out_adj[v].resize(d.out_adj[v].size());
        fill[v] = static_cast<int>(d.out_adj[v].size());
    }
    // Reverse-topological sweep pushing each vertex onto its predecessors'
    // stacks; filling the arrays back-to-front realizes the stacks so that the
    // final lists read in ascending rank.
    std::vector<int> order = d.vertices_by_rank();
    for (int r = d.n - 1; r >= 0; --r) {
        int v = order[r];
        for (int u : d.in_adj[v]) s.out_adj[u][--fill[u]] = v;
    }
    // mirrored ascending sweep keeps in_adj the exact transpose, also sorted
    for (int r = 0; r < d.n; ++r) {
        int v = order[r];
        for (int t : s.out_adj[v]) s.in_adj[t].push_back(v);
    }
    return s;
}

std::vector<int> dfs_reachable(const Dag& d, int s) {
    if (s < 0 || s >= d.n) throw InputError("vertex " + std::to_string(s) + " out of range");
    std::vector<char> seen(d.n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int t : d.out_adj[v])
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < d.n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::size_t BitMatrix::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

BitMatrix transitive_closure_baseline(const Dag& d) {
    BitMatrix m(d.n);
    std::vector<int> stack;
    for (int s = 0; s < d.n; ++s) {
        stack.push_back(s);
        m.set(s, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int t : d.out_adj[v])
                if (!m.get(s, t)) {
                    m.set(s, t);
                    stack.push_back(t);
                }
        }
    }
    return m;
}

}  // namespace chaindex

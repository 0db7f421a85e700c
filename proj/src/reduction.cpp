#include "chaindex/reduction.hpp"

#include <algorithm>

namespace chaindex {

namespace {

enum class Pass { Outgoing, Incoming };

// Shared skeleton for both passes: per vertex, bucket the incident edges by
// the chain of the far endpoint and keep one edge per chain (lowest position
// for outgoing targets, highest for incoming sources). The k_c scratch array
// is reset lazily via per-vertex stamps.
Dag run_pass(const Dag& d, const ChainDecomposition& dec, Pass pass, long long& removed) {
    const int k = dec.k_c();
    Dag out;
    out.n = d.n;
    out.topo_rank = d.topo_rank;
    out.out_adj.resize(d.n);
    out.in_adj.resize(d.n);

    std::vector<int> stamp(k, -1);
    std::vector<int> best(k, -1);
    removed = 0;

    const auto& lists = (pass == Pass::Outgoing) ? d.out_adj : d.in_adj;
    for (int v = 0; v < d.n; ++v) {
        const auto& adj = lists[v];
        for (int t : adj) {
            int c = dec.chain_of[t];
            if (stamp[c] != v) {
                stamp[c] = v;
                best[c] = t;
            } else if (pass == Pass::Outgoing ? dec.pos_of[t] < dec.pos_of[best[c]]
                                              : dec.pos_of[t] > dec.pos_of[best[c]]) {
                best[c] = t;
            }
        }
        auto& kept = (pass == Pass::Outgoing) ? out.out_adj[v] : out.in_adj[v];
        for (int t : adj) {
            if (best[dec.chain_of[t]] == t)
                kept.push_back(t);
            else
                ++removed;
        }
    }

    // rebuild the other side as the exact transpose, ascending by rank so
    // sortedness is preserved
    std::vector<int> order = out.vertices_by_rank();
    if (pass == Pass::Outgoing) {
        for (int r = 0; r < out.n; ++r) {
            int v = order[r];
            for (int t : out.out_adj[v]) out.in_adj[t].push_back(v);
        }
    } else {
        for (int r = out.n - 1; r >= 0; --r) {
            int v = order[r];
            for (int u : out.in_adj[v]) out.out_adj[u].push_back(v);
        }
        for (auto& a : out.out_adj) std::reverse(a.begin(), a.end());
    }
    return out;
}

}  // namespace

std::pair<Dag, ReductionStats> reduce_outgoing(const Dag& d, const ChainDecomposition& dec) {
    ReductionStats st;
    Dag out = run_pass(d, dec, Pass::Outgoing, st.removed_out);
    st.remaining = static_cast<long long>(out.edge_count());
    return {std::move(out), st};
}

std::pair<Dag, ReductionStats> reduce_incoming(const Dag& d, const ChainDecomposition& dec) {
    ReductionStats st;
    Dag out = run_pass(d, dec, Pass::Incoming, st.removed_in);
    st.remaining = static_cast<long long>(out.edge_count());
    return {std::move(out), st};
}

std::pair<Dag, ReductionStats> reduce(const Dag& d, const ChainDecomposition& dec) {
    auto [first, st_out] = reduce_outgoing(d, dec);
    auto [second, st_in] = reduce_incoming(first, dec);
    ReductionStats st;
    st.removed_out = st_out.removed_out;
    st.removed_in = st_in.removed_in;
    st.remaining = static_cast<long long>(second.edge_count());
    return {std::move(second), st};
}

}  // namespace chaindex

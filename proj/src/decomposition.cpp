#include "chaindex/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace chaindex {

namespace {

void fill_labels(ChainDecomposition& dec, int n) {
    dec.chain_of.assign(n, -1);
    dec.pos_of.assign(n, 0);
    for (int c = 0; c < dec.k_c(); ++c) {
        const auto& chain = dec.chains[c];
        for (std::size_t i = 0; i < chain.size(); ++i) {
            dec.chain_of[chain[i]] = c;
            dec.pos_of[chain[i]] = static_cast<int>(i) + 1;
        }
    }
}

}  // namespace

ChainDecomposition decomposition_from_chains(const Dag& d, std::vector<std::vector<int>> chains) {
    ChainDecomposition dec;
    dec.chains = std::move(chains);
    dec.chain_of.assign(d.n, -1);
    dec.pos_of.assign(d.n, 0);
    std::size_t covered = 0;
    for (int c = 0; c < dec.k_c(); ++c) {
        const auto& chain = dec.chains[c];
        if (chain.empty()) throw InputError("chain " + std::to_string(c) + " is empty");
        for (std::size_t i = 0; i < chain.size(); ++i) {
            int v = chain[i];
            if (v < 0 || v >= d.n)
                throw InputError("chain vertex " + std::to_string(v) + " out of range");
            if (dec.chain_of[v] >= 0)
                throw InputError("vertex " + std::to_string(v) + " appears in two chains");
            if (i > 0 && d.topo_rank[chain[i - 1]] >= d.topo_rank[v])
                throw InputError("chain " + std::to_string(c) +
                                 " does not ascend in topological order");
            dec.chain_of[v] = c;
            dec.pos_of[v] = static_cast<int>(i) + 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(d.n))
        throw InputError("chains cover " + std::to_string(covered) + " of " +
                         std::to_string(d.n) + " vertices");
    return dec;
}

ChainDecomposition node_order_paths(const Dag& d) {
    ChainDecomposition dec;
    std::vector<int> tail_chain(d.n, -1);  // chain id if the vertex is a path tail
    for (int v : d.vertices_by_rank()) {
        int c = -1;
        for (int u : d.in_adj[v])
            if (tail_chain[u] >= 0) {
                c = tail_chain[u];
                tail_chain[u] = -1;
                break;
            }
        if (c < 0) {
            c = dec.k_c();
            dec.chains.emplace_back();
        }
        dec.chains[c].push_back(v);
        tail_chain[v] = c;
    }
    fill_labels(dec, d.n);
    return dec;
}

std::pair<ChainDecomposition, ConcatStats> concatenate(const Dag& d,
                                                       const ChainDecomposition& input) {
    const int n = d.n;
    const int k_p = input.k_c();

    std::vector<int> next(n, -1);
    std::vector<int> head(k_p), tail(k_p);
    std::vector<char> alive(k_p, 1);
    std::vector<char> is_tail(n, 0);
    std::vector<int> chain_of_tail(n, -1);
    std::vector<int> chain_of_head(n, -1);
    for (int c = 0; c < k_p; ++c) {
        const auto& chain = input.chains[c];
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) next[chain[i]] = chain[i + 1];
        head[c] = chain.front();
        tail[c] = chain.back();
        is_tail[chain.back()] = 1;
        chain_of_tail[chain.back()] = c;
        chain_of_head[chain.front()] = c;
    }

    // process original chains in ascending topological rank of their heads
    std::vector<int> order(k_p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return d.topo_rank[input.chains[a].front()] < d.topo_rank[input.chains[b].front()];
    });

    ConcatStats stats;
    stats.k_p = k_p;
    std::vector<char> blocked(n, 0);
    for (int c : order) {
        int f = input.chains[c].front();
        // a blocked head was already exhausted by an earlier lookup; no tail
        // can appear in its ancestor cone anymore
        if (blocked[f]) continue;
        LookupResult res =
            reversed_dfs_lookup(d, f, [&](int v) { return is_tail[v] != 0; }, blocked);
        if (res.path.empty()) continue;

        int t = res.path.front();
        int ct = chain_of_tail[t];
        int cf = chain_of_head[f];
        next[t] = f;
        is_tail[t] = 0;
        chain_of_tail[t] = -1;
        chain_of_head[f] = -1;
        tail[ct] = tail[cf];
        chain_of_tail[tail[cf]] = ct;
        alive[cf] = 0;
        ++stats.concatenations;
        stats.total_path_len += static_cast<long long>(res.path.size());
    }

    ChainDecomposition out;
    for (int c = 0; c < k_p; ++c) {
        if (!alive[c]) continue;
        std::vector<int> chain;
        for (int v = head[c]; v >= 0; v = next[v]) chain.push_back(v);
        out.chains.push_back(std::move(chain));
    }
    fill_labels(out, n);
    stats.k_c = out.k_c();
    return {std::move(out), stats};
}

std::pair<ChainDecomposition, ConcatStats> greedy_chains(const Dag& d) {
    const int n = d.n;
    ChainDecomposition dec;
    std::vector<int> chain_id(n, -1);
    std::vector<char> is_tail(n, 0);
    std::vector<char> blocked(n, 0);
    ConcatStats stats;

    auto append = [&](int c, int v) {
        dec.chains[c].push_back(v);
        chain_id[v] = c;
        is_tail[v] = 1;
    };

    for (int v : d.vertices_by_rank()) {
        int c;
        if (chain_id[v] >= 0) {
            c = chain_id[v];
        } else {
            // immediate predecessor that is a chain tail, lowest outdegree
            // first, then lowest id
            int best = -1;
            for (int u : d.in_adj[v]) {
                if (!is_tail[u]) continue;
                if (best < 0 || d.out_adj[u].size() < d.out_adj[best].size() ||
                    (d.out_adj[u].size() == d.out_adj[best].size() && u < best))
                    best = u;
            }
            if (best < 0) {
                LookupResult res =
                    reversed_dfs_lookup(d, v, [&](int x) { return is_tail[x] != 0; }, blocked);
                if (!res.path.empty()) {
                    best = res.path.front();
                    ++stats.concatenations;
                    stats.total_path_len += static_cast<long long>(res.path.size());
                }
            }
            if (best >= 0) {
                c = chain_id[best];
                is_tail[best] = 0;
            } else {
                c = dec.k_c();
                dec.chains.emplace_back();
            }
            append(c, v);
        }
        // pull in the first unassigned immediate successor of in-degree 1,
        // but only while v is still the last vertex of its chain
        if (is_tail[v]) {
            for (int s : d.out_adj[v]) {
                if (chain_id[s] < 0 && d.in_adj[s].size() == 1) {
                    is_tail[v] = 0;
                    append(c, s);
                    break;
                }
            }
        }
    }

    fill_labels(dec, n);
    stats.k_c = dec.k_c();
    stats.k_p = stats.k_c + stats.concatenations;
    return {std::move(dec), stats};
}

}  // namespace chaindex

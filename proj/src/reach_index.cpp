#include "chaindex/reach_index.hpp"

#include <algorithm>
#include <string>

namespace chaindex {

bool ReachIndex::query(int s, int t) const {
    if (s < 0 || s >= n) throw InputError("source vertex " + std::to_string(s) + " out of range");
    if (t < 0 || t >= n) throw InputError("target vertex " + std::to_string(t) + " out of range");
    return query_unchecked(s, t);
}

ReachIndex build_index(const Dag& d, const ChainDecomposition& dec,
                       std::vector<std::pair<int, int>>* transitive_edges) {
    ReachIndex ix;
    ix.n = d.n;
    ix.k_c = dec.k_c();
    ix.chain_of = dec.chain_of;
    ix.pos_of = dec.pos_of;
    ix.idx.assign(static_cast<std::size_t>(d.n) * ix.k_c, 0u);

    const int k = ix.k_c;
    std::vector<int> order = d.vertices_by_rank();
    for (int r = d.n - 1; r >= 0; --r) {
        int v = order[r];
        std::uint32_t* row = ix.idx.data() + static_cast<std::size_t>(v) * k;
        int prev_rank = -1;
        for (int t : d.out_adj[v]) {
            if (d.topo_rank[t] < prev_rank)
                throw PreconditionError("adjacency list of vertex " + std::to_string(v) +
                                        " is not sorted by ascending topological rank");
            prev_rank = d.topo_rank[t];

            std::uint32_t t_pos = static_cast<std::uint32_t>(dec.pos_of[t]);
            std::uint32_t cur = row[dec.chain_of[t]];
            // 0 acts as infinity: t_pos < cur with the sentinel folded in
            if (t_pos - 1u < cur - 1u) {
                ++ix.e_red;
                const std::uint32_t* trow = ix.idx.data() + static_cast<std::size_t>(t) * k;
                for (int j = 0; j < k; ++j) row[j] = std::min(row[j] - 1u, trow[j] - 1u) + 1u;
            } else {
                // the row already covers this position through an earlier
                // successor, so (v,t) has a longer alternative path
                ++ix.e_tr;
                if (transitive_edges) transitive_edges->emplace_back(v, t);
            }
        }
        // the vertex's own chain entry is reflexive knowledge, not evidence of
        // a path; it enters the row only after all successors were classified
        row[dec.chain_of[v]] = static_cast<std::uint32_t>(dec.pos_of[v]);
    }
    return ix;
}

BitMatrix to_closure_matrix(const ReachIndex& ix) {
    BitMatrix m(ix.n);
    for (int s = 0; s < ix.n; ++s)
        for (int t = 0; t < ix.n; ++t)
            if (ix.query_unchecked(s, t)) m.set(s, t);
    return m;
}

}  // namespace chaindex

#pragma once

#include <utility>

#include "chaindex/decomposition.hpp"
#include "chaindex/graph.hpp"

namespace chaindex {

struct ReductionStats {
    long long removed_out = 0;  // dropped by the outgoing pass
    long long removed_in = 0;   // dropped by the incoming pass
    long long remaining = 0;
};

// Keeps, per vertex and target chain, only the outgoing edge to the lowest
// chain position; every dropped edge is transitive. One pass, linear in
// n + |E| with a k_c-sized scratch array reset lazily via stamps.
std::pair<Dag, ReductionStats> reduce_outgoing(const Dag& d, const ChainDecomposition& dec);

// Mirror pass on incoming edges: per vertex and source chain, only the edge
// from the highest chain position survives.
std::pair<Dag, ReductionStats> reduce_incoming(const Dag& d, const ChainDecomposition& dec);

// Outgoing pass then incoming pass. The result has the same transitive
// closure and at most k_c outgoing and k_c incoming edges per vertex.
std::pair<Dag, ReductionStats> reduce(const Dag& d, const ChainDecomposition& dec);

}  // namespace chaindex

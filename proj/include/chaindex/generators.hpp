#pragma once

#include <cstdint>
#include <string>

#include "chaindex/graph.hpp"

namespace chaindex {

enum class Model { ER, BA, WS, PB };

Model model_from_string(const std::string& s);  // throws InputError
std::string model_name(Model m);

// One record per generated graph. avg_degree targets |E| ~= avg_degree * n
// (mean out-degree); model-specific parameters are derived from it unless set
// explicitly. All generators are deterministic functions of their config.
struct GeneratorConfig {
    Model model = Model::ER;
    int n = 0;
    double avg_degree = 0.0;
    std::uint64_t seed = 0;

    double p = -1.0;    // ER: explicit edge probability (overrides avg_degree)
    int ba_m = 0;       // BA: attachments per node (0 = derive)
    int ws_k = 0;       // WS: ring neighbors, even (0 = derive as 2*avg_degree)
    double ws_b = 0.9;  // WS: rewiring probability
    int pb_paths = 100; // PB: predefined path count
};

// Every unordered pair becomes an edge with probability p, oriented from the
// lower to the higher id, so the result is acyclic by construction. Sparse
// case uses geometric jumps between hits; expected O(n + |E|).
Dag gen_er(int n, double p, std::uint64_t seed);

// Preferential attachment: starts from m unconnected nodes, then each new node
// attaches to m distinct existing nodes sampled proportional to degree (the
// first attaching node links to all m seeds). Edges oriented low -> high.
Dag gen_ba(int n, int m, std::uint64_t seed);

// Ring over n nodes joined to the k nearest neighbors; each ring edge (u,v) is
// rewired with probability b to (u,w), w uniform over nodes, avoiding
// self-loops and duplicates. Orientation low -> high applied last.
Dag gen_ws(int n, int k, double b, std::uint64_t seed);

// Path-based model: a random permutation of the vertices is cut into `paths`
// segments by a uniform composition; each segment is chained in ascending id
// order, then uniformly random forward edges are added until |E| reaches
// avg_degree * n.
Dag gen_pb(int n, int paths, double avg_degree, std::uint64_t seed);

Dag generate(const GeneratorConfig& cfg);

// p giving an expected edge count of degree * n for the ER model.
double er_p_for_degree(int n, double degree);

// One-line description of the config and the random stream, suitable for an
// edge-list header comment.
std::string describe(const GeneratorConfig& cfg);

}  // namespace chaindex

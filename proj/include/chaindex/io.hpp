#pragma once

#include <iosfwd>
#include <string>

#include "chaindex/decomposition.hpp"
#include "chaindex/graph.hpp"
#include "chaindex/reach_index.hpp"

namespace chaindex {

// Edge-list text format: optional '#' comment lines, then a header "n m",
// then exactly m lines "u v" with 0-based ids. Parse failures report the
// offending line number.

Digraph load_digraph(const std::string& path);
Digraph read_digraph(std::istream& in);

// load + topological sort; throws CycleError on cyclic input.
Dag load_edge_list(const std::string& path);

void save_edge_list(const std::string& path, const Dag& d, const std::string& header_comment = "");
void write_edge_list(std::ostream& out, const Dag& d, const std::string& header_comment = "");

// Chain file: line i holds the vertex ids of chain i.
void save_chains(const std::string& path, const ChainDecomposition& dec);

// Index file: header "n k_c", then per vertex "chain pos e_0 ... e_{k_c-1}"
// with 1-based chain ids and positions; 0 is the unreachable sentinel.
void save_index(const std::string& path, const ReachIndex& ix);
void write_index(std::ostream& out, const ReachIndex& ix);
ReachIndex load_index(const std::string& path);
ReachIndex read_index(std::istream& in);

}  // namespace chaindex

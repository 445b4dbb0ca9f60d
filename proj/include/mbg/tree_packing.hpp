#pragma once

#include "mbg/board.hpp"

#include <vector>

namespace mbg {

// An edge subset of K_n given by element ids of a complete_graph_board(n).
using EdgeSet = std::vector<ElementId>;

// floor(n/2) pairwise edge-disjoint spanning trees of K_n. Even n: round-robin
// Hamiltonian path decomposition; odd n: Walecki Hamiltonian cycles, each
// minus one edge.
std::vector<EdgeSet> spanning_tree_packing(int n);

// ceil(n/2) edge-disjoint forests covering all of E(K_n). Even n: the n/2
// Hamiltonian paths; odd n: the K_{n+1} path decomposition restricted to [n].
std::vector<EdgeSet> initial_forest_partition(int n);

} // namespace mbg

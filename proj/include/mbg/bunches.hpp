#pragma once

#include "mbg/family.hpp"
#include "mbg/graph.hpp"

#include <cstddef>

namespace mbg {

// All bunch edge sets over K_n built from copies of K: chains of s copies,
// each sharing >= 2 vertices with the union so far and adding >= 1 new
// vertex, with s >= t and t*v(K) <= v(B) <= (t+1)*v(K). Sets are edge element
// ids of complete_graph_board(n), deduplicated. Every emitted bunch is
// checked against the density floor e(B)/v(B) >= m2(K) - delta.
Family enumerate_bunch_family(int n, const SimpleGraph& K, int t, double delta,
                              std::size_t cap = 500000);

} // namespace mbg

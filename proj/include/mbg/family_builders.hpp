#pragma once

#include "mbg/board.hpp"
#include "mbg/family.hpp"
#include "mbg/graph.hpp"

#include <cstddef>

namespace mbg {

inline constexpr std::size_t kDefaultFamilyCap = 2'000'000;

// Non-integer sizes in the constructions below are rounded to the nearest
// integer and clamped to >= 1; for large n the rounding washes out.
int rounded_size(double x);

// Cross-edge families F_1..F_s of the Hamilton construction:
// for j < s: |A| = n^((j-1)eps/2), |B| = n - n^((j+1)eps/2)/2;
// for j = s (= 2/eps): |A| = |B| = n/ln n.
Family hamilton_families(int n, double eps, std::size_t cap = kDefaultFamilyCap);

// All clique edge-sets E(A) with |A| = ceil(n/k).
Family coloring_family(int n, int k, std::size_t cap = kDefaultFamilyCap);

// F_1: cliques on sqrt(n) vertices, F_2: stars missing c*sqrt(n) vertices,
// F_3: cross edges between two sqrt(n)-sets. c defaults to the construction's
// 700 and is configurable because that constant only makes sense at scale.
Family pancyclicity_families(int n, double c = 700.0, std::size_t cap = kDefaultFamilyCap);

// Edge sets of all copies of H inside K_n, one group "H".
Family h_copies_family(int n, const SimpleGraph& h, std::size_t cap = kDefaultFamilyCap);

// Helpers shared by builders and tests; emit edge-id sets over K_n.
std::vector<ElementId> clique_edge_set(const Board& board, const std::vector<int>& vertices);
std::vector<ElementId> cross_edge_set(const Board& board, const std::vector<int>& a,
                                      const std::vector<int>& b);

unsigned long long binomial(int n, int k);

} // namespace mbg

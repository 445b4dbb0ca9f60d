#include "mbg/tree_packing.hpp"

#include <stdexcept>

namespace mbg {

namespace {

// Zigzag Hamiltonian path on Z_{2m} starting at j: j, j+1, j-1, j+2, ...
std::vector<int> zigzag_path(int two_m, int j) {
    std::vector<int> path;
    path.reserve(static_cast<size_t>(two_m));
    path.push_back(j);
    for (int step = 1; step < two_m; ++step) {
        int off = (step + 1) / 2;
        int v = step % 2 == 1 ? j + off : j - off;
        path.push_back(((v % two_m) + two_m) % two_m);
    }
    return path;
}

std::vector<EdgeSet> even_path_decomposition(int n) {
    // n even: n/2 edge-disjoint Hamiltonian paths covering E(K_n)
    Board board = complete_graph_board(n);
    std::vector<EdgeSet> trees;
    for (int j = 0; j < n / 2; ++j) {
        std::vector<int> path = zigzag_path(n, j);
        EdgeSet tree;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            tree.push_back(board.edge_id(path[i], path[i + 1]));
        trees.push_back(std::move(tree));
    }
    return trees;
}

} // namespace

std::vector<EdgeSet> spanning_tree_packing(int n) {
    if (n < 2) throw std::invalid_argument("spanning_tree_packing: n < 2");
    if (n % 2 == 0) return even_path_decomposition(n);

    // odd n: Walecki decomposition of K_n into (n-1)/2 Hamiltonian cycles
    // (circle Z_{n-1} plus a hub vertex n-1); drop one edge from each cycle.
    Board board = complete_graph_board(n);
    int m = (n - 1) / 2;
    int circle = n - 1;
    std::vector<EdgeSet> trees;
    for (int j = 0; j < m; ++j) {
        std::vector<int> path = zigzag_path(circle, j);
        EdgeSet tree;
        tree.push_back(board.edge_id(n - 1, path.front()));
        for (size_t i = 0; i + 1 < path.size(); ++i)
            tree.push_back(board.edge_id(path[i], path[i + 1]));
        // the cycle would close with (path.back(), n-1); leaving it out turns
        // the cycle into a Hamiltonian path, still a spanning tree
        trees.push_back(std::move(tree));
    }
    return trees;
}

std::vector<EdgeSet> initial_forest_partition(int n) {
    if (n < 2) throw std::invalid_argument("initial_forest_partition: n < 2");
    if (n % 2 == 0) return even_path_decomposition(n);

    // odd n: decompose K_{n+1} into (n+1)/2 Hamiltonian paths and drop the
    // phantom vertex n; each restricted path is a forest, and together they
    // still cover every edge of K_n.
    Board board = complete_graph_board(n);
    std::vector<EdgeSet> forests;
    for (int j = 0; j < (n + 1) / 2; ++j) {
        std::vector<int> path = zigzag_path(n + 1, j);
        EdgeSet forest;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (path[i] == n || path[i + 1] == n) continue;
            forest.push_back(board.edge_id(path[i], path[i + 1]));
        }
        forests.push_back(std::move(forest));
    }
    return forests;
}

} // namespace mbg

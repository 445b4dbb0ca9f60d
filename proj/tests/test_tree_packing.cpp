#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/graph.hpp"
#include "mbg/tree_packing.hpp"

#include <set>

using namespace mbg;

namespace {

bool spans_and_is_tree(const Board& board, const EdgeSet& tree) {
    std::vector<std::pair<int, int>> edges;
    for (ElementId e : tree) edges.push_back(board.edge(e));
    if (static_cast<int>(edges.size()) != board.n - 1) return false;
    return is_spanning_connected(board.n, edges);
}

bool edges_form_forest(const Board& board, const EdgeSet& f) {
    std::vector<std::pair<int, int>> edges;
    for (ElementId e : f) edges.push_back(board.edge(e));
    SimpleGraph g(board.n, std::move(edges));
    return is_acyclic(g);
}

} // namespace

TEST_CASE("spanning tree packings are disjoint spanning trees") {
    for (int n : {4, 5, 6, 8, 9, 12, 16}) {
        Board board = complete_graph_board(n);
        auto trees = spanning_tree_packing(n);
        CHECK(static_cast<int>(trees.size()) == n / 2);
        std::set<ElementId> used;
        for (const auto& t : trees) {
            CHECK(spans_and_is_tree(board, t));
            for (ElementId e : t) {
                CHECK(!used.count(e));
                used.insert(e);
            }
        }
        // floor(n/2) trees use floor(n/2)*(n-1) distinct edges
        CHECK(used.size() == static_cast<size_t>(n / 2) * static_cast<size_t>(n - 1));
    }
}

TEST_CASE("initial forest partition covers every edge exactly once") {
    for (int n : {4, 5, 7, 8, 11, 16}) {
        Board board = complete_graph_board(n);
        auto forests = initial_forest_partition(n);
        CHECK(static_cast<int>(forests.size()) == (n + 1) / 2);
        std::set<ElementId> used;
        for (const auto& f : forests) {
            CHECK(edges_form_forest(board, f));
            for (ElementId e : f) {
                CHECK(e >= 0);
                CHECK(e < board.elements);
                CHECK(!used.count(e));
                used.insert(e);
            }
        }
        CHECK(used.size() == static_cast<size_t>(board.elements));
    }
}

TEST_CASE("even n forests are hamilton paths, so they span") {
    Board board = complete_graph_board(8);
    for (const auto& f : initial_forest_partition(8)) {
        CHECK(f.size() == 7);
        std::vector<std::pair<int, int>> edges;
        for (ElementId e : f) edges.push_back(board.edge(e));
        CHECK(is_spanning_connected(8, edges));
        SimpleGraph g(8, std::move(edges));
        for (int v = 0; v < 8; ++v) CHECK(g.degree(v) <= 2);
    }
}

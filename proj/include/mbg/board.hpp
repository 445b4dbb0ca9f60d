#pragma once

#include <utility>
#include <vector>

namespace mbg {

using ElementId = int;

// A board is a dense set of element ids 0..elements-1. When the board is the
// edge set of K_n, each element carries an unordered vertex-pair label and
// ids follow lexicographic pair order, so every tie-break downstream is
// reproducible.
struct Board {
    int elements = 0;
    int n = 0; // vertex count when edge-labeled, 0 for abstract boards
    std::vector<std::pair<int, int>> labels; // size == elements when labeled

    bool labeled() const { return !labels.empty(); }
    std::pair<int, int> edge(ElementId e) const { return labels[static_cast<size_t>(e)]; }
    ElementId edge_id(int u, int v) const;
};

Board abstract_board(int elements);
Board complete_graph_board(int n);

} // namespace mbg

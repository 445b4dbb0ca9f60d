#include "mbg/board.hpp"

#include <stdexcept>
#include <string>

namespace mbg {

ElementId Board::edge_id(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge_id: bad vertex pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") for n=" + std::to_string(n));
    if (u > v) std::swap(u, v);
    // lexicographic pair order: (0,1),(0,2),...,(0,n-1),(1,2),...
    long long before = static_cast<long long>(u) * (2 * n - u - 1) / 2;
    return static_cast<ElementId>(before + (v - u - 1));
}

Board abstract_board(int elements) {
    if (elements < 0) throw std::invalid_argument("abstract_board: negative size");
    Board b;
    b.elements = elements;
    return b;
}

Board complete_graph_board(int n) {
    if (n < 2) throw std::invalid_argument("complete_graph_board: n must be >= 2");
    Board b;
    b.n = n;
    b.elements = n * (n - 1) / 2;
    b.labels.reserve(static_cast<size_t>(b.elements));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.labels.emplace_back(u, v);
    return b;
}

} // namespace mbg

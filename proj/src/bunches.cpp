#include "mbg/bunches.hpp"

#include "mbg/board.hpp"
#include "mbg/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

namespace mbg {

namespace {

struct BunchState {
    std::uint64_t vertex_mask = 0;
    std::vector<ElementId> edges; // sorted element ids
    int copies = 0;

    bool operator<(const BunchState& o) const {
        if (vertex_mask != o.vertex_mask) return vertex_mask < o.vertex_mask;
        if (edges != o.edges) return edges < o.edges;
        return copies < o.copies;
    }
};

} // namespace

Family enumerate_bunch_family(int n, const SimpleGraph& K, int t, double delta, std::size_t cap) {
    if (K.n < 3) throw std::invalid_argument("enumerate_bunch_family: v(K) must be >= 3");
    if (!is_connected(K)) throw std::invalid_argument("enumerate_bunch_family: K must be connected");
    if (t < 1) throw std::invalid_argument("enumerate_bunch_family: t must be >= 1");

    Board board = complete_graph_board(n);
    SimpleGraph host = complete_graph(n);
    std::vector<GraphCopy> copies = enumerate_copies(K, host, K.n);

    struct CopyRef {
        std::uint64_t mask;
        std::vector<ElementId> edges;
    };
    std::vector<CopyRef> refs;
    refs.reserve(copies.size());
    for (const auto& c : copies) {
        CopyRef r;
        r.mask = c.vertex_mask;
        for (auto [u, v] : c.edges) r.edges.push_back(board.edge_id(u, v));
        std::sort(r.edges.begin(), r.edges.end());
        refs.push_back(std::move(r));
    }

    int v_lo = t * K.n;
    int v_hi = (t + 1) * K.n;
    double floor_density = max_2_density(K).value() - delta;

    std::set<BunchState> frontier;
    for (const auto& r : refs) frontier.insert(BunchState{r.mask, r.edges, 1});

    // edge set -> vertex mask of emitted bunches
    std::map<std::vector<ElementId>, std::uint64_t> emitted;
    std::size_t visited = frontier.size();

    while (!frontier.empty()) {
        std::set<BunchState> next;
        for (const auto& s : frontier) {
            int v = std::popcount(s.vertex_mask);
            if (s.copies >= t && v >= v_lo && v <= v_hi) emitted[s.edges] = s.vertex_mask;
            for (const auto& r : refs) {
                std::uint64_t shared = s.vertex_mask & r.mask;
                std::uint64_t fresh = r.mask & ~s.vertex_mask;
                if (std::popcount(shared) < 2 || fresh == 0) continue;
                int nv = std::popcount(s.vertex_mask | r.mask);
                if (nv > v_hi) continue;
                BunchState ns;
                ns.vertex_mask = s.vertex_mask | r.mask;
                ns.edges.resize(s.edges.size() + r.edges.size());
                ns.edges.erase(std::set_union(s.edges.begin(), s.edges.end(), r.edges.begin(),
                                              r.edges.end(), ns.edges.begin()),
                               ns.edges.end());
                ns.copies = s.copies + 1;
                if (next.insert(std::move(ns)).second) {
                    if (++visited > cap)
                        throw family_too_large("enumerate_bunch_family: state cap exceeded",
                                               visited);
                }
            }
        }
        frontier = std::move(next);
    }

    Family fam;
    FamilyGroup group;
    group.name = "BUNCH";
    for (const auto& [edges, mask] : emitted) {
        double density = static_cast<double>(edges.size()) / std::popcount(mask);
        if (density < floor_density)
            throw invariant_violation("enumerate_bunch_family: bunch below density floor, d=" +
                                      std::to_string(density));
        group.sets.push_back(edges);
    }
    fam.groups.push_back(std::move(group));
    if (!fam.groups.front().sets.empty()) normalize_family(fam, board.elements);
    return fam;
}

} // namespace mbg

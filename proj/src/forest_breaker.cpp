#include "mbg/forest_breaker.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace mbg {

namespace {

// Unique path between u and v in the forest given by `edges`, or empty when
// they are disconnected. Returns the edge ids along the path.
std::vector<ElementId> forest_path(const Board& board, const std::vector<ElementId>& edges, int u,
                                   int v) {
    std::vector<std::vector<std::pair<int, ElementId>>> adj(static_cast<size_t>(board.n));
    for (ElementId e : edges) {
        auto [a, b] = board.edge(e);
        adj[static_cast<size_t>(a)].push_back({b, e});
        adj[static_cast<size_t>(b)].push_back({a, e});
    }
    std::vector<ElementId> via(static_cast<size_t>(board.n), -1);
    std::vector<int> parent(static_cast<size_t>(board.n), -1);
    std::vector<char> seen(static_cast<size_t>(board.n), 0);
    std::queue<int> q;
    q.push(u);
    seen[static_cast<size_t>(u)] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (auto [y, e] : adj[static_cast<size_t>(x)]) {
            if (seen[static_cast<size_t>(y)]) continue;
            seen[static_cast<size_t>(y)] = 1;
            parent[static_cast<size_t>(y)] = x;
            via[static_cast<size_t>(y)] = e;
            q.push(y);
        }
    }
    std::vector<ElementId> path;
    if (!seen[static_cast<size_t>(v)]) return path;
    for (int x = v; x != u; x = parent[static_cast<size_t>(x)])
        path.push_back(via[static_cast<size_t>(x)]);
    return path;
}

bool edges_acyclic(const Board& board, const std::vector<ElementId>& edges) {
    std::vector<int> parent(static_cast<size_t>(board.n));
    for (int i = 0; i < board.n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (ElementId e : edges) {
        auto [a, b] = board.edge(e);
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<size_t>(ra)] = rb;
    }
    return true;
}

void erase_edge(std::vector<ElementId>& v, ElementId e) {
    v.erase(std::remove(v.begin(), v.end(), e), v.end());
}

} // namespace

ForestGroups make_forest_groups(const Board& board, const std::vector<EdgeSet>& forests, int b) {
    if (b < 1) throw std::invalid_argument("make_forest_groups: bias must be >= 1");
    if (!board.labeled()) throw std::invalid_argument("make_forest_groups: board must be edge-labeled");
    ForestGroups fg;
    fg.board = board;
    fg.b = b;
    fg.edge_group.assign(static_cast<size_t>(board.elements), -1);
    fg.edge_forest.assign(static_cast<size_t>(board.elements), -1);
    std::size_t per_group = static_cast<std::size_t>(b) + 1;
    for (std::size_t i = 0; i < forests.size(); i += per_group) {
        ForestGroups::Group group;
        for (std::size_t j = i; j < std::min(i + per_group, forests.size()); ++j) {
            if (!edges_acyclic(board, forests[j]))
                throw invariant_violation("make_forest_groups: input forest has a cycle");
            int fi = static_cast<int>(group.forests.size());
            for (ElementId e : forests[j]) {
                if (fg.edge_group[static_cast<size_t>(e)] != -1)
                    throw std::invalid_argument("make_forest_groups: forests are not edge-disjoint");
                fg.edge_group[static_cast<size_t>(e)] = static_cast<int>(fg.groups.size());
                fg.edge_forest[static_cast<size_t>(e)] = fi;
            }
            group.forests.push_back(forests[j]);
        }
        fg.groups.push_back(std::move(group));
    }
    return fg;
}

std::vector<ElementId> forest_breaker_move(ForestGroups& fg, ElementId maker_edge,
                                           std::size_t want, const GameState& state) {
    int gi = fg.edge_group[static_cast<size_t>(maker_edge)];
    if (gi < 0) throw invalid_state("forest_breaker_move: Maker edge outside every group");
    ForestGroups::Group& group = fg.groups[static_cast<size_t>(gi)];
    int own_forest = fg.edge_forest[static_cast<size_t>(maker_edge)];
    erase_edge(group.forests[static_cast<size_t>(own_forest)], maker_edge);
    auto [u, v] = fg.board.edge(maker_edge);
    if (!forest_path(fg.board, group.maker_edges, u, v).empty())
        throw invariant_violation("forest_breaker_move: Maker closed a cycle in its group");

    std::vector<ElementId> picks;
    for (std::size_t fi = 0; fi < group.forests.size(); ++fi) {
        if (static_cast<int>(fi) == own_forest) continue;
        std::vector<ElementId> combined = group.maker_edges;
        combined.insert(combined.end(), group.forests[fi].begin(), group.forests[fi].end());
        // Maker edges alone are acyclic and the invariant held before the
        // move, so any cycle runs through maker_edge; breaking the unique
        // u-v path at one forest edge restores acyclicity.
        std::vector<ElementId> path = forest_path(fg.board, combined, u, v);
        ElementId cut = -1;
        for (ElementId e : path) {
            if (fg.edge_group[static_cast<size_t>(e)] == gi &&
                fg.edge_forest[static_cast<size_t>(e)] == static_cast<int>(fi) &&
                std::find(group.maker_edges.begin(), group.maker_edges.end(), e) ==
                    group.maker_edges.end())
                if (cut == -1 || e < cut) cut = e;
        }
        if (!path.empty() && cut == -1)
            throw invariant_violation("forest_breaker_move: cycle with no free forest edge");
        if (cut != -1 && picks.size() < want) {
            picks.push_back(cut);
            erase_edge(group.forests[fi], cut);
        }
    }
    group.maker_edges.push_back(maker_edge);

    // leftovers: lowest free edge of the same group, then anywhere
    auto claim_free = [&](ElementId e) {
        int g = fg.edge_group[static_cast<size_t>(e)];
        if (g >= 0)
            erase_edge(fg.groups[static_cast<size_t>(g)]
                           .forests[static_cast<size_t>(fg.edge_forest[static_cast<size_t>(e)])],
                       e);
        picks.push_back(e);
    };
    while (picks.size() < want) {
        ElementId best = -1;
        for (const auto& forest : group.forests)
            for (ElementId e : forest)
                if (state.is_free(e) && std::find(picks.begin(), picks.end(), e) == picks.end())
                    if (best == -1 || e < best) best = e;
        if (best == -1) {
            for (ElementId e : state.active)
                if (state.is_free(e) && std::find(picks.begin(), picks.end(), e) == picks.end()) {
                    best = e;
                    break;
                }
        }
        if (best == -1) throw invalid_state("forest_breaker_move: no free element for leftover pick");
        claim_free(best);
    }
    return picks;
}

bool locking_invariant_holds(const ForestGroups& fg) {
    for (const auto& group : fg.groups) {
        if (!edges_acyclic(fg.board, group.maker_edges)) return false;
        for (const auto& forest : group.forests) {
            std::vector<ElementId> combined = group.maker_edges;
            combined.insert(combined.end(), forest.begin(), forest.end());
            if (!edges_acyclic(fg.board, combined)) return false;
        }
    }
    return true;
}

std::vector<EdgeSet> maker_forests(const ForestGroups& fg) {
    std::vector<EdgeSet> out;
    for (const auto& group : fg.groups) {
        if (!edges_acyclic(fg.board, group.maker_edges))
            throw invariant_violation("maker_forests: Maker's group edges contain a cycle");
        EdgeSet f = group.maker_edges;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    return out;
}

void ForestBreaker::start_stage(const Board& board, const std::vector<ElementId>& active,
                                const GameFamily&, int bias) {
    std::vector<EdgeSet> forests;
    if (!have_carried_) {
        if (static_cast<int>(active.size()) != board.elements)
            throw invalid_state("ForestBreaker: first stage must start on the full K_n board");
        forests = initial_forest_partition(board.n);
    } else {
        std::set<ElementId> on_board(active.begin(), active.end());
        std::size_t covered = 0;
        for (const auto& f : carried_forests_) {
            for (ElementId e : f) {
                if (!on_board.count(e))
                    throw invalid_state("ForestBreaker: carried forest edge missing from board");
                ++covered;
            }
        }
        if (covered != active.size())
            throw invalid_state("ForestBreaker: board has edges outside the carried forests");
        forests = carried_forests_;
    }
    fg_ = make_forest_groups(board, forests, bias);
    pending_.clear();
}

void ForestBreaker::observe(const std::vector<ElementId>& opponent_move) {
    pending_.insert(pending_.end(), opponent_move.begin(), opponent_move.end());
}

std::vector<ElementId> ForestBreaker::choose(const GameState& state) {
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(state.bias),
                                             static_cast<std::size_t>(state.free_count));
    if (pending_.empty()) throw invalid_state("ForestBreaker::choose before any Maker move");
    ElementId maker_edge = pending_.front();
    pending_.erase(pending_.begin());
    return forest_breaker_move(fg_, maker_edge, want, state);
}

void ForestBreaker::end_stage(const EngineReduction&) {
    // When the Maker's move exhausts the board the stage ends without a
    // Breaker turn, so choose() never sees that edge; register it here.
    for (ElementId e : pending_) {
        int gi = fg_.edge_group[static_cast<size_t>(e)];
        if (gi < 0) throw invalid_state("ForestBreaker: Maker edge outside every group");
        ForestGroups::Group& group = fg_.groups[static_cast<size_t>(gi)];
        erase_edge(group.forests[static_cast<size_t>(fg_.edge_forest[static_cast<size_t>(e)])], e);
        auto [u, v] = fg_.board.edge(e);
        if (!forest_path(fg_.board, group.maker_edges, u, v).empty())
            throw invariant_violation("ForestBreaker: Maker closed a cycle in its group");
        group.maker_edges.push_back(e);
    }
    pending_.clear();
    std::vector<EdgeSet> forests = maker_forests(fg_);
    carried_forests_.clear();
    for (auto& f : forests)
        if (!f.empty()) carried_forests_.push_back(std::move(f));
    have_carried_ = true;
}

} // namespace mbg

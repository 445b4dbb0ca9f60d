#include "mbg/lehman.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mbg {

int TreePair::find(int v) {
    while (uf_parent[static_cast<size_t>(v)] != v) {
        uf_parent[static_cast<size_t>(v)] =
            uf_parent[static_cast<size_t>(uf_parent[static_cast<size_t>(v)])];
        v = uf_parent[static_cast<size_t>(v)];
    }
    return v;
}

void TreePair::contract(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return;
    uf_parent[static_cast<size_t>(ru)] = rv;
    --components;
}

void LehmanMaker::start_stage(const Board& board, const std::vector<ElementId>& active,
                              const GameFamily&, int bias) {
    board_ = board;
    if (!board.labeled()) throw std::invalid_argument("LehmanMaker requires an edge-labeled board");
    n_ = board.n;
    bias_ = bias;

    std::vector<EdgeSet> trees;
    if (!have_carried_) {
        // First stage must be the full K_n board; later boards carry over.
        if (static_cast<int>(active.size()) != board.elements)
            throw invalid_state("LehmanMaker: first stage must start on the full K_n board");
        trees = spanning_tree_packing(n_);
    } else {
        trees = carried_trees_;
        std::set<ElementId> on_board(active.begin(), active.end());
        for (const auto& t : trees)
            for (ElementId e : t)
                if (!on_board.count(e))
                    throw invariant_violation("LehmanMaker: carried tree edge missing from board");
    }

    pairs_.clear();
    edge_pair_.assign(static_cast<size_t>(board.elements), -1);
    edge_tree_.assign(static_cast<size_t>(board.elements), -1);
    pending_.clear();

    for (size_t i = 0; i + 1 < trees.size(); i += 2) {
        TreePair pair;
        pair.uf_parent.resize(static_cast<size_t>(n_));
        std::iota(pair.uf_parent.begin(), pair.uf_parent.end(), 0);
        pair.components = n_;
        int pi = static_cast<int>(pairs_.size());
        for (int side = 0; side < 2; ++side) {
            for (ElementId e : trees[i + static_cast<size_t>(side)]) {
                auto [u, v] = board.edge(e);
                pair.trees[side].push_back(TreePair::TreeEdge{e, u, v, false, false});
                edge_pair_[static_cast<size_t>(e)] = pi;
                edge_tree_[static_cast<size_t>(e)] = side;
            }
        }
        pairs_.push_back(std::move(pair));
    }
    // an odd leftover tree is ignored for this stage
}

void LehmanMaker::observe(const std::vector<ElementId>& opponent_move) {
    for (ElementId e : opponent_move) {
        int pi = edge_pair_[static_cast<size_t>(e)];
        if (pi < 0) continue;
        auto& tree = pairs_[static_cast<size_t>(pi)].trees[edge_tree_[static_cast<size_t>(e)]];
        for (auto& te : tree)
            if (te.id == e) te.dead = true;
        pending_.push_back(e);
    }
}

void LehmanMaker::claim_in_pair(int pair_index, ElementId e) {
    TreePair& pair = pairs_[static_cast<size_t>(pair_index)];
    auto& tree = pair.trees[edge_tree_[static_cast<size_t>(e)]];
    for (auto& te : tree)
        if (te.id == e) te.claimed = true;
    auto [u, v] = board_.edge(e);
    pair.contract(u, v);
    ++pair.maker_moves;
}

// Finds a free partner-tree edge that reconnects the cut Breaker opened.
// Returns -1 when no cut exists (the dead edge was already redundant).
ElementId LehmanMaker::try_repair(ElementId breaker_edge) {
    int pi = edge_pair_[static_cast<size_t>(breaker_edge)];
    TreePair& pair = pairs_[static_cast<size_t>(pi)];
    int side = edge_tree_[static_cast<size_t>(breaker_edge)];
    auto [bu, bv] = board_.edge(breaker_edge);
    if (pair.find(bu) == pair.find(bv)) return -1; // endpoints already merged

    // component of rep(bu) in the cut tree's live edges
    std::vector<int> comp_parent(static_cast<size_t>(n_));
    std::iota(comp_parent.begin(), comp_parent.end(), 0);
    auto comp_find = [&](int v) {
        while (comp_parent[static_cast<size_t>(v)] != v) {
            comp_parent[static_cast<size_t>(v)] =
                comp_parent[static_cast<size_t>(comp_parent[static_cast<size_t>(v)])];
            v = comp_parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& te : pair.trees[side]) {
        if (te.dead) continue;
        int a = pair.find(te.u), b = pair.find(te.v);
        int ra = comp_find(a), rb = comp_find(b);
        if (ra != rb) comp_parent[static_cast<size_t>(ra)] = rb;
    }
    int side_u = comp_find(pair.find(bu));
    // the dead edge may be redundant in contracted space even when its own
    // endpoints are not merged yet
    if (side_u == comp_find(pair.find(bv))) return -1;

    // partner tree edge crossing the cut
    const auto& partner = pair.trees[1 - side];
    ElementId best = -1;
    for (const auto& te : partner) {
        if (te.dead || te.claimed) continue;
        int a = pair.find(te.u), b = pair.find(te.v);
        if (a == b) continue;
        bool a_in = comp_find(a) == side_u;
        bool b_in = comp_find(b) == side_u;
        if (a_in != b_in && (best == -1 || te.id < best)) best = te.id;
    }
    if (best == -1) {
        if (bias_ == 1)
            throw invariant_violation("LehmanMaker: no repair edge for a genuine cut (b=1)");
        return -1; // Lehman only guarantees repairs at b=1
    }
    return best;
}

std::vector<ElementId> LehmanMaker::choose(const GameState& state) {
    while (!pending_.empty()) {
        ElementId e = pending_.front();
        pending_.pop_front();
        ElementId f = try_repair(e);
        if (f != -1) {
            claim_in_pair(edge_pair_[static_cast<size_t>(f)], f);
            return {f};
        }
    }

    // proactive move: pair with the most uncontracted vertices
    int best_pair = -1;
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].components <= 1) continue;
        // the pair must still offer a useful free edge
        bool usable = false;
        for (int side = 0; side < 2 && !usable; ++side)
            for (const auto& te : pairs_[i].trees[side])
                if (!te.dead && !te.claimed &&
                    pairs_[i].find(te.u) != pairs_[i].find(te.v)) {
                    usable = true;
                    break;
                }
        if (!usable) continue;
        if (best_pair == -1 ||
            pairs_[i].components > pairs_[static_cast<size_t>(best_pair)].components)
            best_pair = static_cast<int>(i);
    }
    if (best_pair != -1) {
        TreePair& pair = pairs_[static_cast<size_t>(best_pair)];
        ElementId pick = -1;
        for (int side = 0; side < 2; ++side)
            for (const auto& te : pair.trees[side])
                if (!te.dead && !te.claimed && pair.find(te.u) != pair.find(te.v))
                    if (pick == -1 || te.id < pick) pick = te.id;
        claim_in_pair(best_pair, pick);
        return {pick};
    }

    // nothing useful anywhere: burn the lowest-id free element
    for (ElementId e : state.active)
        if (state.is_free(e)) return {e};
    throw invalid_state("LehmanMaker::choose on exhausted board");
}

void LehmanMaker::end_stage(const EngineReduction&) {
    carried_trees_.clear();
    for (auto& pair : pairs_) {
        if (pair.components != 1) continue; // incomplete pair (forfeit or b>1): drop
        EdgeSet tree;
        for (int side = 0; side < 2; ++side)
            for (const auto& te : pair.trees[side])
                if (te.claimed) tree.push_back(te.id);
        std::sort(tree.begin(), tree.end());
        carried_trees_.push_back(std::move(tree));
    }
    have_carried_ = true;
}

} // namespace mbg

#pragma once

#include "mbg/engine.hpp"
#include "mbg/tree_packing.hpp"

#include <deque>
#include <vector>

namespace mbg {

// Cut-repair state for one pair of edge-disjoint spanning trees. Maker claims
// contract vertices; within a pair both trees always span the contracted set.
struct TreePair {
    struct TreeEdge {
        ElementId id;
        int u, v;
        bool dead = false;    // claimed by Breaker
        bool claimed = false; // claimed by Maker
    };
    std::vector<TreeEdge> trees[2];
    std::vector<int> uf_parent; // contraction union-find over vertices
    int components = 0;         // contracted vertex count
    int maker_moves = 0;

    int find(int v);
    void contract(int u, int v);
};

// Maker strategy for the unbiased multistage connectivity game: pair up the
// spanning trees of the current board, answer Breaker on the pair he attacked
// by reconnecting the cut through the partner tree, and carry the finished
// trees into the next stage.
class LehmanMaker : public Strategy {
public:
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;
    void end_stage(const EngineReduction& reduction) override;

    int pair_count() const { return static_cast<int>(pairs_.size()); }
    const TreePair& pair(int i) const { return pairs_[static_cast<size_t>(i)]; }

private:
    Board board_;
    int n_ = 0;
    int bias_ = 1;
    std::vector<TreePair> pairs_;
    std::vector<int> edge_pair_;  // element id -> pair index, -1 none
    std::vector<int> edge_tree_;  // element id -> tree index within pair
    std::deque<ElementId> pending_;
    std::vector<EdgeSet> carried_trees_;
    bool have_carried_ = false;

    void claim_in_pair(int pair_index, ElementId e);
    ElementId try_repair(ElementId breaker_edge);
};

} // namespace mbg

#pragma once

#include "mbg/engine.hpp"
#include "mbg/tree_packing.hpp"

#include <vector>

namespace mbg {

// Per-stage state of the board-splitting Breaker for clique-type games. The
// stage board is partitioned into edge-disjoint forests, the forests into
// groups of at most b+1, and Breaker answers Maker inside Maker's group so
// that Maker's edges in each group stay acyclic. Concretely Breaker keeps,
// per group, the invariant that Maker's edges together with any single
// remaining forest are acyclic; claiming one edge per endangered forest
// restores it after every Maker move.
struct ForestGroups {
    struct Group {
        std::vector<std::vector<ElementId>> forests; // unclaimed edges per forest
        std::vector<ElementId> maker_edges;
    };
    Board board;
    int b = 1;
    std::vector<Group> groups;
    std::vector<int> edge_group;  // element id -> group index, -1 none
    std::vector<int> edge_forest; // element id -> forest index within group
};

ForestGroups make_forest_groups(const Board& board,
                                const std::vector<EdgeSet>& forests, int b);

// Registers one Maker edge and returns Breaker's response: the forced repair
// edges (one per forest of the group that would now close a cycle with
// Maker's edges) padded with leftover free edges up to `want`. Mutates the
// group state for both players' claims. Throws invariant_violation when the
// Maker edge already closes a cycle inside its group.
std::vector<ElementId> forest_breaker_move(ForestGroups& fg, ElementId maker_edge,
                                           std::size_t want, const GameState& state);

// True when in every group Maker's edges plus any one remaining forest are
// acyclic. Implies no unclaimed group edge joins two vertices of one Maker
// component.
bool locking_invariant_holds(const ForestGroups& fg);

// Per-group Maker edge sets, each verified acyclic; these are the forests of
// the next stage board. Throws invariant_violation on a cycle.
std::vector<EdgeSet> maker_forests(const ForestGroups& fg);

// Breaker strategy built on the above. The first stage must be played on the
// full K_n board; later stages regroup the previous stage's Maker forests
// into batches of at most b+1.
class ForestBreaker : public Strategy {
public:
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;
    void end_stage(const EngineReduction& reduction) override;

    const ForestGroups& state() const { return fg_; }

private:
    ForestGroups fg_;
    std::vector<ElementId> pending_;
    std::vector<EdgeSet> carried_forests_;
    bool have_carried_ = false;
};

} // namespace mbg

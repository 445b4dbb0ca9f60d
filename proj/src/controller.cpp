#include "mbg/controller.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <string>

namespace mbg {

MultistageDiscrepancyMaker::MultistageDiscrepancyMaker(const Family& base_family, double gamma,
                                                       int b)
    : base_family_(base_family), params_(multistage_params(base_family, gamma, b)) {
    if (params_.t <= 0.0)
        throw degenerate_parameters("multistage controller: t = " + std::to_string(params_.t) +
                                    " <= 0 (gamma too large or groups too thin)");
    if (params_.delta >= 1.0)
        throw degenerate_parameters("multistage controller: delta = " +
                                    std::to_string(params_.delta) + " >= 1");
    config_ = biased_discrepancy_config(params_.delta, b);
}

void MultistageDiscrepancyMaker::start_stage(const Board& board,
                                             const std::vector<ElementId>& active,
                                             const GameFamily&, int bias) {
    std::vector<char> on_board(static_cast<size_t>(board.elements), 0);
    for (ElementId e : active) on_board[static_cast<size_t>(e)] = 1;

    stage_family_.groups.clear();
    for (const auto& g : base_family_.groups) {
        FamilyGroup leftover;
        leftover.name = g.name;
        for (const auto& set : g.sets) {
            std::vector<ElementId> cut;
            for (ElementId e : set)
                if (on_board[static_cast<size_t>(e)]) cut.push_back(e);
            if (!cut.empty()) leftover.sets.push_back(std::move(cut));
        }
        if (!leftover.sets.empty()) stage_family_.groups.push_back(std::move(leftover));
    }

    PotentialConfig cfg = config_.potential;
    cfg.b = bias;
    state_.emplace(stage_family_, cfg, board.elements);
}

void MultistageDiscrepancyMaker::observe(const std::vector<ElementId>& opponent_move) {
    for (ElementId e : opponent_move) state_->breaker_update(e);
}

std::vector<ElementId> MultistageDiscrepancyMaker::choose(const GameState& state) {
    return {state_->maker_move(state.free_elements())};
}

} // namespace mbg

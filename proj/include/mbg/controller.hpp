#pragma once

#include "mbg/engine.hpp"
#include "mbg/params.hpp"
#include "mbg/potential.hpp"

#include <optional>

namespace mbg {

// Maker controller for multistage play over a fixed base family: derives
// (t, delta) from the family's group statistics, turns delta into a potential
// configuration, and replays the greedy potential rule each stage on the
// leftover sets F ∩ X^i (multiset, empty intersections dropped). The (a)/(b)
// side conditions are advisory and surfaced via params().
class MultistageDiscrepancyMaker : public Strategy {
public:
    MultistageDiscrepancyMaker(const Family& base_family, double gamma, int b);

    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;

    const MultistageParams& params() const { return params_; }
    const DiscrepancyConfig& config() const { return config_; }
    // Leftover family of the current stage (intersections with the board).
    const Family& stage_family() const { return stage_family_; }
    const PotentialState* state() const { return state_ ? &*state_ : nullptr; }

private:
    Family base_family_;
    MultistageParams params_;
    DiscrepancyConfig config_;
    Family stage_family_;
    std::optional<PotentialState> state_;
};

} // namespace mbg

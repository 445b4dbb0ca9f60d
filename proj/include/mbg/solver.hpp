#pragma once

#include "mbg/engine.hpp"

#include <cstdint>
#include <vector>

namespace mbg {

enum class BreakerBranching {
    ExactClaim, // exactly min(b, free) elements per Breaker turn
    AllSubsets  // every nonempty subset of size <= b; slower, used to validate
};

// Exact minimax winner of one stage on the given active elements.
Player solve_single_stage(const Board& board, const std::vector<ElementId>& active,
                          const GameFamily& family, int b,
                          BreakerBranching branching = BreakerBranching::ExactClaim,
                          std::size_t max_elements = 24);

// Sentinel for games whose stage count has no finite bound (the reduction can
// reach a fixed point, e.g. a single-element board whose set survives every
// stage).
inline constexpr int kTauUnbounded = 1 << 20;

struct TauResult {
    int tau = 0;
    bool unbounded = false;
};

// Exact multistage value: the largest s such that Maker can keep the reduced
// family nonempty for s stages, with both sides playing optimally.
TauResult solve_tau_exact(const Board& board, const GameFamily& family, int b, Variant variant,
                          std::size_t max_elements = 12);

// Plays single-stage optimal moves from fresh solves; intended for tiny
// boards where the solver is the ground truth (policy-replay checks).
class ExactSingleStageStrategy : public Strategy {
public:
    explicit ExactSingleStageStrategy(Player role) : role_(role) {}
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override {(void)opponent_move;}
    std::vector<ElementId> choose(const GameState& state) override;

private:
    Player role_;
    Board board_;
    std::vector<ElementId> active_;
    GameFamily family_;
    int bias_ = 1;
};

} // namespace mbg

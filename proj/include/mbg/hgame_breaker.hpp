#pragma once

#include "mbg/beck.hpp"
#include "mbg/bunches.hpp"
#include "mbg/engine.hpp"

#include <memory>

namespace mbg {

// Densest-subgraph target selection: a subgraph K of H attaining the maximum
// 2-density (e-1)/(v-2). Ties go to fewer vertices, then lexicographically
// smallest vertex set.
SimpleGraph choose_K(const SimpleGraph& h);

struct BunchParams {
    int t = 2;
    double delta = 0.5;
    bool from_config = true; // false when the closed-form derivation applied
};

// Derives (delta, t) from the density slack inequality
//   (t+2)v(K) / ((m2(K)-delta)*t*v(K) - 1)  <  1/(m2(K)-delta) + eps/4
// taking delta slightly under eps*m2^2/(4+eps*m2) and the smallest workable
// t. Falls back to the supplied configuration when no t <= 1000 satisfies the
// inequality; at small n the asymptotic constants rarely do.
BunchParams derive_bunch_params(const SimpleGraph& K, double eps, const BunchParams& config);

// Two-phase Breaker for the H-game on K_n. Phase 1 (a fixed number of stages)
// plays the weight-greedy rule against the family of bunches of K-copies;
// phase 2 treats each K-collection of the current board as a territory and
// answers Maker moves inside one with free edges of the same collection.
class HGameBreaker : public Strategy {
public:
    HGameBreaker(int n, const SimpleGraph& h, int b, double eps,
                 BunchParams config = BunchParams{}, std::size_t bunch_cap = 500000);

    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;

    int phase1_stages() const { return phase1_stages_; }
    const BunchParams& params() const { return params_; }
    const SimpleGraph& k_graph() const { return k_; }
    const Family& bunch_family() const { return bunches_; }
    bool in_phase1() const { return stage_ <= phase1_stages_; }

private:
    SimpleGraph k_;
    BunchParams params_;
    Family bunches_;
    int phase1_stages_ = 0;
    int stage_ = 0;

    std::unique_ptr<BeckState> beck_;
    std::vector<std::vector<ElementId>> territories_; // phase 2 collections
    std::vector<int> edge_territory_;
    ElementId last_maker_edge_ = -1;
};

} // namespace mbg

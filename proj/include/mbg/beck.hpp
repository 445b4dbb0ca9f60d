#pragma once

#include "mbg/engine.hpp"

#include <vector>

namespace mbg {

// Weight bookkeeping for the danger-function Breaker: each target set still
// untouched by Breaker carries weight (1+b)^{-u}, u its count of elements not
// yet claimed by Maker. A set Breaker has hit is dead and weighs nothing.
class BeckState {
public:
    BeckState(const std::vector<std::vector<ElementId>>& sets, int element_count, int b);

    void maker_claim(ElementId e);
    void breaker_claim(ElementId e);

    // Sum of weights of alive sets containing e.
    double element_weight(ElementId e) const { return weight_sum_[static_cast<size_t>(e)]; }
    double total_weight() const;
    // Slow recomputation from the hit counters, used as a cross-check.
    double recompute_total() const;

    std::size_t set_count() const { return sets_.size(); }
    bool alive(std::size_t i) const { return alive_[i]; }
    int unowned(std::size_t i) const { return unowned_[i]; }

private:
    std::vector<std::vector<ElementId>> sets_;
    std::vector<std::vector<int>> incident_; // element id -> set indices
    std::vector<char> alive_;
    std::vector<int> unowned_;
    std::vector<double> weight_;     // per set, valid while alive
    std::vector<double> weight_sum_; // per element
    double log_factor_ = 0.0;        // log(1+b)
    double factor_ = 2.0;            // 1+b
};

// Breaker strategy: each pick takes the free element with the largest summed
// weight over alive target sets, updating weights between the b picks of one
// turn. Lowest element id breaks ties.
class BeckBreaker : public Strategy {
public:
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;

    const BeckState& state() const { return *state_; }

private:
    std::unique_ptr<BeckState> state_;
};

} // namespace mbg

#pragma once

#include "mbg/engine.hpp"

#include <vector>

namespace mbg {

struct PotentialConfig {
    double alpha = 0.0; // fraction in [0,1]
    double mu = 0.5;    // in (0,1)
    int b = 1;

    // lambda = (1+mu)^((1-alpha)/b) * (1-mu)^alpha
    double lambda() const;
    void validate() const;
};

// Per-set potentials phi(F) = (1+mu)^((|F∩Y|-(1-a)|F|)/b) * (1-mu)^(|F∩X|-a|F|)
// maintained incrementally together with per-element sums phi(v).
class PotentialState {
public:
    PotentialState(const Family& family, PotentialConfig config, int element_count);

    // Free element maximizing phi(v), smallest id on ties; applies the Maker
    // update (factor 1-mu on sets through it). `free` must be sorted.
    ElementId maker_move(const std::vector<ElementId>& free);

    // Scale sets through `e` by (1+mu)^(1/b) after a Breaker claim.
    void breaker_update(ElementId e);

    double element_potential(ElementId e) const { return phi_sum_[static_cast<size_t>(e)]; }
    double set_potential(std::size_t set_index) const { return phi_[set_index]; }
    double total_potential() const;

    // Recomputes every phi(F) from the claim counters; the incremental values
    // must match to ~1e-12 relative. Used as the bookkeeping oracle.
    std::vector<double> recompute_from_scratch() const;

    std::size_t set_count() const { return phi_.size(); }
    const PotentialConfig& config() const { return config_; }

private:
    PotentialConfig config_;
    std::vector<std::vector<ElementId>> sets_;
    std::vector<double> phi_;
    std::vector<int> maker_hits_;   // |F ∩ X|
    std::vector<int> breaker_hits_; // |F ∩ Y|
    std::vector<double> phi_sum_;   // per element
    std::vector<std::vector<int>> incident_; // element -> set indices
};

struct CriterionResult {
    bool holds = false;
    double sum = 0.0; // sum over F of lambda^{-|F|}
};

CriterionResult check_share_criterion(const Family& family, const PotentialConfig& config);

// Maker agent playing the greedy potential rule on the stage's explicit family.
class PotentialMaker : public Strategy {
public:
    explicit PotentialMaker(PotentialConfig config) : config_(config) {}
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>& opponent_move) override;
    std::vector<ElementId> choose(const GameState& state) override;

    const PotentialState* state() const { return state_ ? &*state_ : nullptr; }

private:
    PotentialConfig config_;
    std::optional<PotentialState> state_;
};

} // namespace mbg

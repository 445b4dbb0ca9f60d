#include "mbg/beck.hpp"

#include "mbg/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace mbg {

BeckState::BeckState(const std::vector<std::vector<ElementId>>& sets, int element_count, int b)
    : sets_(sets),
      incident_(static_cast<size_t>(element_count)),
      alive_(sets.size(), 1),
      unowned_(sets.size()),
      weight_(sets.size()),
      weight_sum_(static_cast<size_t>(element_count), 0.0) {
    if (b < 1) throw std::invalid_argument("BeckState: bias must be >= 1");
    factor_ = 1.0 + static_cast<double>(b);
    log_factor_ = std::log(factor_);
    for (size_t i = 0; i < sets_.size(); ++i) {
        unowned_[i] = static_cast<int>(sets_[i].size());
        weight_[i] = std::exp(-unowned_[i] * log_factor_);
        for (ElementId e : sets_[i]) {
            incident_[static_cast<size_t>(e)].push_back(static_cast<int>(i));
            weight_sum_[static_cast<size_t>(e)] += weight_[i];
        }
    }
}

void BeckState::maker_claim(ElementId e) {
    for (int si : incident_[static_cast<size_t>(e)]) {
        auto i = static_cast<size_t>(si);
        --unowned_[i];
        if (!alive_[i]) continue;
        double before = weight_[i];
        weight_[i] *= factor_;
        for (ElementId f : sets_[i]) weight_sum_[static_cast<size_t>(f)] += weight_[i] - before;
    }
}

void BeckState::breaker_claim(ElementId e) {
    for (int si : incident_[static_cast<size_t>(e)]) {
        auto i = static_cast<size_t>(si);
        if (!alive_[i]) continue;
        alive_[i] = 0;
        for (ElementId f : sets_[i]) weight_sum_[static_cast<size_t>(f)] -= weight_[i];
    }
}

double BeckState::total_weight() const {
    double t = 0.0;
    for (size_t i = 0; i < sets_.size(); ++i)
        if (alive_[i]) t += weight_[i];
    return t;
}

double BeckState::recompute_total() const {
    double t = 0.0;
    for (size_t i = 0; i < sets_.size(); ++i)
        if (alive_[i]) t += std::exp(-unowned_[i] * log_factor_);
    return t;
}

void BeckBreaker::start_stage(const Board& board, const std::vector<ElementId>& active,
                              const GameFamily& family, int bias) {
    state_ = std::make_unique<BeckState>(family.breaker_targets(board, active), board.elements,
                                         bias);
}

void BeckBreaker::observe(const std::vector<ElementId>& opponent_move) {
    for (ElementId e : opponent_move) state_->maker_claim(e);
}

std::vector<ElementId> BeckBreaker::choose(const GameState& state) {
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(state.bias),
                                             static_cast<std::size_t>(state.free_count));
    std::vector<ElementId> picks;
    std::vector<char> taken(static_cast<size_t>(state.board.elements), 0);
    for (std::size_t p = 0; p < want; ++p) {
        ElementId best = -1;
        double best_w = -1.0;
        for (ElementId e : state.active) {
            if (!state.is_free(e) || taken[static_cast<size_t>(e)]) continue;
            double w = state_->element_weight(e);
            if (w > best_w) {
                best_w = w;
                best = e;
            }
        }
        if (best == -1) throw invalid_state("BeckBreaker: no free element left mid-turn");
        picks.push_back(best);
        taken[static_cast<size_t>(best)] = 1;
        state_->breaker_claim(best);
    }
    return picks;
}

} // namespace mbg

#include "mbg/potential.hpp"

#include "mbg/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace mbg {

double PotentialConfig::lambda() const {
    return std::pow(1.0 + mu, (1.0 - alpha) / b) * std::pow(1.0 - mu, alpha);
}

void PotentialConfig::validate() const {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("PotentialConfig: mu must be in (0,1)");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("PotentialConfig: alpha must be in [0,1]");
    if (b < 1) throw std::invalid_argument("PotentialConfig: b must be >= 1");
}

PotentialState::PotentialState(const Family& family, PotentialConfig config, int element_count)
    : config_(config) {
    config_.validate();
    for (const auto& group : family.groups)
        for (const auto& s : group.sets) sets_.push_back(s);
    phi_.resize(sets_.size());
    maker_hits_.assign(sets_.size(), 0);
    breaker_hits_.assign(sets_.size(), 0);
    phi_sum_.assign(static_cast<size_t>(element_count), 0.0);
    incident_.assign(static_cast<size_t>(element_count), {});
    double log1p_mu = std::log(1.0 + config_.mu);
    double log1m_mu = std::log(1.0 - config_.mu);
    for (size_t i = 0; i < sets_.size(); ++i) {
        double sz = static_cast<double>(sets_[i].size());
        double log_phi = -(1.0 - config_.alpha) * sz / config_.b * log1p_mu - config_.alpha * sz * log1m_mu;
        phi_[i] = std::exp(log_phi);
        for (ElementId e : sets_[i]) {
            incident_[static_cast<size_t>(e)].push_back(static_cast<int>(i));
            phi_sum_[static_cast<size_t>(e)] += phi_[i];
        }
    }
}

ElementId PotentialState::maker_move(const std::vector<ElementId>& free) {
    if (free.empty()) throw invalid_state("potential maker_move: no free element");
    ElementId best = free.front();
    for (ElementId e : free)
        if (phi_sum_[static_cast<size_t>(e)] > phi_sum_[static_cast<size_t>(best)]) best = e;
    double factor = 1.0 - config_.mu;
    for (int si : incident_[static_cast<size_t>(best)]) {
        double delta = phi_[static_cast<size_t>(si)] * (factor - 1.0);
        phi_[static_cast<size_t>(si)] *= factor;
        ++maker_hits_[static_cast<size_t>(si)];
        for (ElementId w : sets_[static_cast<size_t>(si)]) phi_sum_[static_cast<size_t>(w)] += delta;
    }
    return best;
}

void PotentialState::breaker_update(ElementId e) {
    double factor = std::pow(1.0 + config_.mu, 1.0 / config_.b);
    for (int si : incident_[static_cast<size_t>(e)]) {
        double delta = phi_[static_cast<size_t>(si)] * (factor - 1.0);
        phi_[static_cast<size_t>(si)] *= factor;
        ++breaker_hits_[static_cast<size_t>(si)];
        for (ElementId w : sets_[static_cast<size_t>(si)]) phi_sum_[static_cast<size_t>(w)] += delta;
    }
}

double PotentialState::total_potential() const {
    double total = 0.0;
    for (double p : phi_) total += p;
    return total;
}

std::vector<double> PotentialState::recompute_from_scratch() const {
    std::vector<double> out(phi_.size());
    double log1p_mu = std::log(1.0 + config_.mu);
    double log1m_mu = std::log(1.0 - config_.mu);
    for (size_t i = 0; i < sets_.size(); ++i) {
        double sz = static_cast<double>(sets_[i].size());
        double log_phi = (breaker_hits_[i] - (1.0 - config_.alpha) * sz) / config_.b * log1p_mu +
                         (maker_hits_[i] - config_.alpha * sz) * log1m_mu;
        out[i] = std::exp(log_phi);
    }
    return out;
}

CriterionResult check_share_criterion(const Family& family, const PotentialConfig& config) {
    config.validate();
    double log_lambda = (1.0 - config.alpha) / config.b * std::log(1.0 + config.mu) +
                        config.alpha * std::log(1.0 - config.mu);
    CriterionResult res;
    long double sum = 0.0L;
    for (const auto& group : family.groups)
        for (const auto& s : group.sets)
            sum += std::exp(-static_cast<long double>(s.size()) * log_lambda);
    res.sum = static_cast<double>(sum);
    res.holds = res.sum < 1.0;
    return res;
}

void PotentialMaker::start_stage(const Board& board, const std::vector<ElementId>&,
                                 const GameFamily& family, int bias) {
    if (family.kind != GameFamily::Kind::Explicit)
        throw std::invalid_argument("PotentialMaker needs an explicit family");
    PotentialConfig cfg = config_;
    cfg.b = bias;
    state_.emplace(family.family, cfg, board.elements);
}

void PotentialMaker::observe(const std::vector<ElementId>& opponent_move) {
    for (ElementId e : opponent_move) state_->breaker_update(e);
}

std::vector<ElementId> PotentialMaker::choose(const GameState& state) {
    return {state_->maker_move(state.free_elements())};
}

} // namespace mbg

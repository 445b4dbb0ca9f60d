#include "mbg/params.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbg {

double epsilon_from_mu(double mu, int b) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("epsilon_from_mu: mu must be in (0,1)");
    if (b < 1) throw std::invalid_argument("epsilon_from_mu: b must be >= 1");
    double num = mu * mu - std::log(1.0 - mu * mu) / (b + 1);
    double den = std::log(1.0 + mu) / b - std::log(1.0 - mu);
    return num / den;
}

DiscrepancyConfig biased_discrepancy_config(double delta, int b) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("biased_discrepancy_config: delta must be in (0,1)");
    DiscrepancyConfig out;
    double mu = delta / 2.0;
    out.eps = epsilon_from_mu(mu, b);
    out.potential.mu = mu;
    out.potential.b = b;
    out.potential.alpha = 1.0 / (b + 1) - out.eps;
    if (out.potential.alpha <= 0.0) {
        out.feasible = false; // small-board degeneracy
        out.potential.alpha = 0.0;
    }
    return out;
}

MultistageParams multistage_params(const Family& family, double gamma, int b) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("multistage_params: gamma must be in (0,1)");
    auto stats = family_stats(family);
    std::size_t s = stats.size();
    MultistageParams out;
    double log_b1 = std::log(static_cast<double>(b + 1));
    double min_log = 0.0;
    double max_ratio = 0.0;
    out.condition_a = true;
    out.condition_b = true;
    bool first = true;
    for (const auto& st : stats) {
        double kj = static_cast<double>(st.min_size);
        double lnF = std::log(static_cast<double>(st.count));
        if (st.count <= s) {
            out.condition_a = false;
            out.notes.push_back("group '" + st.name + "': |F_j| <= s");
        }
        if (lnF <= 0.0) {
            // single-set group: ln|F_j| = 0 makes the ratio diverge; flag it
            out.notes.push_back("group '" + st.name + "': |F_j| = 1, ratio undefined, treated as +inf");
            lnF = std::nextafter(0.0, 1.0);
        }
        double ratio = kj / lnF;
        double log_ratio = std::log(ratio) / log_b1;
        if (first || log_ratio < min_log) min_log = log_ratio;
        double inv = lnF / kj;
        if (first || inv > max_ratio) max_ratio = inv;
        first = false;
        double lhs = std::pow(ratio, gamma / 2.0);
        double rhs = 20.0 * b * std::max(1.0, log_ratio);
        if (!(lhs >= rhs)) {
            out.condition_b = false;
            out.notes.push_back("group '" + st.name + "': condition (b) fails (" +
                                std::to_string(lhs) + " < " + std::to_string(rhs) + ")");
        }
    }
    out.t = (1.0 - gamma) * min_log;
    out.delta = 4.0 * std::pow(max_ratio, gamma / 2.0);
    return out;
}

GammaResult gamma_calculator(GameKind game, double n, int b, const GammaExtra& extra) {
    double num = std::log(static_cast<double>(b)) + std::log(std::log(n) / std::log(b + 1.0)) + 5.0;
    double gamma = 0.0;
    switch (game) {
        case GameKind::Hamilton:
            gamma = 2.0 * num /
                    ((1.0 - extra.eps) * std::log(n) - 2.0 * std::log(std::log(n)) - std::log(2.0));
            break;
        case GameKind::Coloring:
            gamma = 2.0 * num / (std::log(n) - 2.0 * std::log(static_cast<double>(extra.k)) -
                                 std::log(4.0) - std::log(std::log(2.0)));
            break;
        case GameKind::HGame:
            gamma = 2.0 * extra.m2 * num / (std::log(n) - 2.0 * extra.m2 * std::log(std::log(n)));
            break;
        case GameKind::Pancyclicity:
            gamma = 2.0 * num /
                    (std::log(std::sqrt(n)) - std::log(std::log(n)) - std::log(3000.0));
            break;
        case GameKind::Connectivity:
            // the unbiased connectivity strategy does not use the controller;
            // fall back to the hamilton expression with eps = 0
            gamma = 2.0 * num / (std::log(n) - 2.0 * std::log(std::log(n)) - std::log(2.0));
            break;
    }
    GammaResult res;
    res.gamma = gamma;
    res.valid = std::isfinite(gamma) && gamma > 0.0 && gamma < 1.0;
    return res;
}

} // namespace mbg

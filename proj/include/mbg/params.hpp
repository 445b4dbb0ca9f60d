#pragma once

#include "mbg/family.hpp"
#include "mbg/potential.hpp"

#include <string>
#include <vector>

namespace mbg {

// eps solving e^{mu^2} = (1+mu)^{1/(b+1)+eps/b} (1-mu)^{1/(b+1)-eps}:
//   eps = (mu^2 - ln(1-mu^2)/(b+1)) / (ln(1+mu)/b - ln(1-mu)).
// Always satisfies 0 < eps < 2*mu.
double epsilon_from_mu(double mu, int b);

struct DiscrepancyConfig {
    PotentialConfig potential; // alpha = 1/(b+1) - eps, mu = delta/2
    double eps = 0.0;
    bool feasible = true; // false when alpha <= 0 at this scale
};

// Parameters for claiming a (1/(b+1)-delta) fraction of every set.
DiscrepancyConfig biased_discrepancy_config(double delta, int b);

struct MultistageParams {
    double t = 0.0;     // (1-gamma) * min_j log_{b+1}(k_j / ln|F_j|)
    double delta = 0.0; // 4 * max_j (ln|F_j| / k_j)^{gamma/2}
    bool condition_a = false; // |F_j| > s for all j
    bool condition_b = false; // (k_j/ln|F_j|)^{gamma/2} >= 20b*max{1, log_{b+1}(k_j/ln|F_j|)}
    std::vector<std::string> notes;
};

MultistageParams multistage_params(const Family& family, double gamma, int b);

enum class GameKind { Connectivity, Hamilton, Coloring, HGame, Pancyclicity };

struct GammaResult {
    double gamma = 0.0;
    bool valid = false; // gamma in (0,1)
};

struct GammaExtra {
    double eps = 0.0; // hamilton
    int k = 2;        // coloring
    double m2 = 2.0;  // hgame: m_2(H)
};

GammaResult gamma_calculator(GameKind game, double n, int b, const GammaExtra& extra = {});

} // namespace mbg

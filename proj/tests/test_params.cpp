#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/params.hpp"

#include <cmath>

using namespace mbg;

namespace {

// residual of the defining identity, zero at the true eps
double identity_residual(double mu, int b, double eps) {
    double lhs = std::exp(mu * mu);
    double rhs = std::pow(1.0 + mu, 1.0 / (b + 1) + eps / b) *
                 std::pow(1.0 - mu, 1.0 / (b + 1) - eps);
    return lhs - rhs;
}

// independent bisection solve of the same identity
double bisect_eps(double mu, int b) {
    double lo = 0.0, hi = 2.0 * mu;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        // rhs is increasing in eps: (1+mu)^(eps/b) * (1-mu)^(-eps) grows
        if (identity_residual(mu, b, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("epsilon solves its defining identity exactly") {
    for (int b : {1, 2, 3, 5, 10}) {
        for (double mu = 0.02; mu < 0.96; mu += 0.03) {
            double eps = epsilon_from_mu(mu, b);
            CHECK(eps > 0.0);
            CHECK(eps < 2.0 * mu);
            CHECK(std::abs(identity_residual(mu, b, eps)) < 1e-10);
        }
    }
}

TEST_CASE("epsilon matches an independent root finder") {
    CHECK(epsilon_from_mu(0.25, 1) == doctest::Approx(bisect_eps(0.25, 1)).epsilon(1e-9));
    CHECK(epsilon_from_mu(0.5, 1) == doctest::Approx(bisect_eps(0.5, 1)).epsilon(1e-9));
    CHECK(epsilon_from_mu(0.5, 3) == doctest::Approx(bisect_eps(0.5, 3)).epsilon(1e-9));
    CHECK(epsilon_from_mu(0.8, 2) == doctest::Approx(bisect_eps(0.8, 2)).epsilon(1e-9));
    CHECK_THROWS(epsilon_from_mu(0.0, 1));
    CHECK_THROWS(epsilon_from_mu(1.0, 1));
    CHECK_THROWS(epsilon_from_mu(0.5, 0));
}

TEST_CASE("discrepancy config wires delta through mu to alpha") {
    DiscrepancyConfig cfg = biased_discrepancy_config(0.5, 1);
    CHECK(cfg.potential.mu == doctest::Approx(0.25));
    CHECK(cfg.potential.b == 1);
    CHECK(cfg.eps == doctest::Approx(epsilon_from_mu(0.25, 1)));
    CHECK(cfg.potential.alpha == doctest::Approx(0.5 - cfg.eps));
    CHECK(cfg.feasible);

    // large delta drives alpha negative at high bias: flagged, clamped
    DiscrepancyConfig tight = biased_discrepancy_config(0.9, 8);
    if (!tight.feasible) CHECK(tight.potential.alpha == 0.0);
    CHECK_THROWS(biased_discrepancy_config(0.0, 1));
    CHECK_THROWS(biased_discrepancy_config(1.0, 1));
}

TEST_CASE("multistage parameters from group statistics") {
    // two groups: (k=400, count=3) and (k=256, count=5)
    Family f;
    f.groups.push_back(FamilyGroup{"A", {}});
    f.groups.push_back(FamilyGroup{"B", {}});
    for (int i = 0; i < 3; ++i) {
        std::vector<ElementId> s(400);
        for (int j = 0; j < 400; ++j) s[static_cast<size_t>(j)] = i * 400 + j;
        f.groups[0].sets.push_back(std::move(s));
    }
    for (int i = 0; i < 5; ++i) {
        std::vector<ElementId> s(256);
        for (int j = 0; j < 256; ++j) s[static_cast<size_t>(j)] = 1200 + i * 256 + j;
        f.groups[1].sets.push_back(std::move(s));
    }
    double gamma = 0.5;
    int b = 1;
    MultistageParams p = multistage_params(f, gamma, b);

    double rA = 400.0 / std::log(3.0), rB = 256.0 / std::log(5.0);
    double t_expect = (1.0 - gamma) * std::min(std::log(rA), std::log(rB)) / std::log(2.0);
    double d_expect = 4.0 * std::pow(std::max(1.0 / rA, 1.0 / rB), gamma / 2.0);
    CHECK(p.t == doctest::Approx(t_expect).epsilon(1e-12));
    CHECK(p.delta == doctest::Approx(d_expect).epsilon(1e-12));
    CHECK(p.t > 0.0);
    // |F_A| = 3 is not above the group count s = 2... it is; condition (a)
    CHECK(p.condition_a);
    // condition (b) needs ratio^(gamma/2) >= 20b*log stuff: 364^0.25 ~ 4.4 < 20
    CHECK(!p.condition_b);
}

TEST_CASE("degenerate statistics are flagged") {
    Family f = single_group_family({{0, 1}, {2, 3}}); // k=2, tiny
    MultistageParams p = multistage_params(f, 0.5, 1);
    CHECK(p.delta >= 1.0); // 4*(ln2/2)^0.25 > 1
    CHECK(!p.condition_b);

    Family single = single_group_family({{0, 1, 2}});
    MultistageParams ps = multistage_params(single, 0.5, 1);
    CHECK(!ps.condition_a); // one set, one group
    CHECK(!ps.notes.empty());

    CHECK_THROWS(multistage_params(f, 0.0, 1));
    CHECK_THROWS(multistage_params(f, 1.0, 1));
}

TEST_CASE("gamma calculator validity ranges") {
    // desk scale: the closed forms blow past (0,1)
    GammaExtra extra;
    extra.eps = 0.5;
    CHECK(!gamma_calculator(GameKind::Hamilton, 16, 1, extra).valid);
    extra.k = 2;
    CHECK(!gamma_calculator(GameKind::Coloring, 16, 1, extra).valid);
    // astronomically large n brings gamma into range
    CHECK(gamma_calculator(GameKind::Coloring, 1e40, 1, extra).valid);
    extra.m2 = 2.0;
    CHECK(gamma_calculator(GameKind::HGame, 1e80, 1, extra).valid);
    GammaResult h = gamma_calculator(GameKind::Hamilton, 1e40, 1, extra);
    CHECK(h.valid);
    CHECK(h.gamma > 0.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/baseline.hpp"
#include "mbg/potential.hpp"

#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace mbg;

TEST_CASE("lambda matches its closed form") {
    PotentialConfig cfg;
    cfg.alpha = 0.2;
    cfg.mu = 0.5;
    cfg.b = 2;
    double expect = std::pow(1.5, 0.8 / 2.0) * std::pow(0.5, 0.2);
    CHECK(cfg.lambda() == doctest::Approx(expect).epsilon(1e-12));
    cfg.validate();

    PotentialConfig bad = cfg;
    bad.mu = 1.5;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("initial potentials and the greedy pick") {
    // alpha = 0, mu = 0.5, b = 1: phi(F) = 1.5^(-|F|/1) initially... check via
    // the recompute oracle rather than a formula
    Board b = abstract_board(4);
    Family f = single_group_family({{0, 1}, {0, 2}, {3}});
    PotentialConfig cfg;
    cfg.alpha = 0.25;
    cfg.mu = 0.5;
    cfg.b = 1;
    PotentialState st(f, cfg, 4);
    auto scratch = st.recompute_from_scratch();
    for (size_t i = 0; i < scratch.size(); ++i)
        CHECK(st.set_potential(i) == doctest::Approx(scratch[i]).epsilon(1e-12));
    // element 0 sits in two sets, so it carries the largest summed potential
    // among {0,1,2}; set {3} is a singleton with higher phi
    CHECK(st.element_potential(0) ==
          doctest::Approx(st.set_potential(0) + st.set_potential(1)).epsilon(1e-12));

    std::vector<ElementId> free{0, 1, 2};
    ElementId pick = st.maker_move(free);
    CHECK(pick == 0);
}

TEST_CASE("ties break to the lowest element id") {
    Family f = single_group_family({{0, 1}, {2, 3}});
    PotentialConfig cfg;
    cfg.alpha = 0.1;
    cfg.mu = 0.4;
    cfg.b = 1;
    PotentialState st(f, cfg, 4);
    std::vector<ElementId> free{0, 1, 2, 3};
    CHECK(st.maker_move(free) == 0);
}

TEST_CASE("incremental updates track the scratch recomputation through random play") {
    std::mt19937_64 rng(2026);
    for (int rep = 0; rep < 30; ++rep) {
        Family f = testutil::random_family(rng, 14, 12, 2, 6);
        PotentialConfig cfg;
        cfg.alpha = 0.15;
        cfg.mu = 0.3 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng);
        cfg.b = 1 + static_cast<int>(rng() % 3);
        PotentialState st(f, cfg, 14);

        std::vector<ElementId> free(14);
        for (int i = 0; i < 14; ++i) free[static_cast<size_t>(i)] = i;
        bool maker_turn = true;
        while (!free.empty()) {
            if (maker_turn) {
                ElementId e = st.maker_move(free);
                free.erase(std::find(free.begin(), free.end(), e));
            } else {
                size_t idx = rng() % free.size();
                st.breaker_update(free[idx]);
                free.erase(free.begin() + static_cast<long>(idx));
            }
            maker_turn = !maker_turn;
            auto scratch = st.recompute_from_scratch();
            double total = 0;
            for (size_t i = 0; i < scratch.size(); ++i) {
                CHECK(st.set_potential(i) ==
                      doctest::Approx(scratch[i]).epsilon(1e-10));
                total += scratch[i];
            }
            CHECK(st.total_potential() == doctest::Approx(total).epsilon(1e-10));
        }
    }
}

TEST_CASE("criterion sums lambda^{-|F|} over all sets") {
    // 5 disjoint sets of size 3 and lambda known in closed form
    Family f = single_group_family({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}, {12, 13, 14}});
    PotentialConfig cfg;
    cfg.alpha = 0.2;
    cfg.mu = 0.5;
    cfg.b = 1;
    auto res = check_share_criterion(f, cfg);
    double lam = cfg.lambda();
    CHECK(res.sum == doctest::Approx(5.0 * std::pow(lam, -3.0)).epsilon(1e-12));
    CHECK(res.holds == (res.sum < 1.0));

    // large sets: sum tiny, criterion holds
    Family big = single_group_family({std::vector<ElementId>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9,
                                                             10, 11, 12, 13, 14, 15}});
    auto res2 = check_share_criterion(big, cfg);
    CHECK(res2.holds);
}

TEST_CASE("potential maker hits the guaranteed fraction when the criterion holds") {
    // When sum lambda^{-|F|} < 1, greedy play guarantees Maker at least
    // alpha*|F| elements of every set against any Breaker.
    std::mt19937_64 rng(777);
    int verified = 0;
    for (int rep = 0; rep < 40; ++rep) {
        Family f = testutil::random_family(rng, 16, 6, 9, 12);
        PotentialConfig cfg;
        cfg.alpha = 0.14;
        cfg.mu = 0.5;
        cfg.b = 1;
        if (!check_share_criterion(f, cfg).holds) continue;
        ++verified;

        Board board = abstract_board(16);
        GameFamily gf = GameFamily::explicit_family(f);
        PotentialMaker maker(cfg);
        RandomStrategy breaker(Player::Breaker, derive_seed(5, static_cast<std::uint64_t>(rep)));
        StageOutcome out = play_stage(board, [] {
            std::vector<ElementId> a(16);
            for (int i = 0; i < 16; ++i) a[static_cast<size_t>(i)] = i;
            return a;
        }(), gf, 1, maker, breaker, Variant::Standard);
        REQUIRE(!out.forfeit);
        // recount Maker's share of every set from the final board
        std::vector<char> mine(16, 0);
        for (ElementId e : out.reduction.next_board) mine[static_cast<size_t>(e)] = 1;
        for (const auto& g : f.groups)
            for (const auto& s : g.sets) {
                int got = 0;
                for (ElementId e : s) got += mine[static_cast<size_t>(e)];
                CHECK(static_cast<double>(got) >=
                      cfg.alpha * static_cast<double>(s.size()) - 1e-9);
            }
    }
    CHECK(verified > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/baseline.hpp"
#include "mbg/beck.hpp"
#include "mbg/engine.hpp"

#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace mbg;

TEST_CASE("initial weights are (1+b)^-|F|") {
    std::vector<std::vector<ElementId>> sets{{0, 1}, {2, 3, 4}};
    BeckState st(sets, 5, 1);
    CHECK(st.total_weight() == doctest::Approx(0.25 + 0.125));
    CHECK(st.element_weight(0) == doctest::Approx(0.25));
    CHECK(st.element_weight(2) == doctest::Approx(0.125));

    BeckState st2(sets, 5, 2);
    CHECK(st2.total_weight() == doctest::Approx(std::pow(3.0, -2) + std::pow(3.0, -3)));
}

TEST_CASE("claims update weights, Breaker kills sets") {
    std::vector<std::vector<ElementId>> sets{{0, 1}, {0, 2}};
    BeckState st(sets, 3, 1);
    st.maker_claim(0);
    CHECK(st.element_weight(1) == doctest::Approx(0.5));
    CHECK(st.element_weight(2) == doctest::Approx(0.5));
    CHECK(st.total_weight() == doctest::Approx(1.0));
    st.breaker_claim(1);
    CHECK(!st.alive(0));
    CHECK(st.alive(1));
    CHECK(st.total_weight() == doctest::Approx(0.5));
    CHECK(st.element_weight(0) == doctest::Approx(0.5)); // only the live set counts
    CHECK(st.recompute_total() == doctest::Approx(st.total_weight()));
}

TEST_CASE("greedy pick and lowest-id tie break") {
    Board board = abstract_board(3);
    GameFamily gf = GameFamily::explicit_family(single_group_family({{0, 1}, {0, 2}}));
    std::vector<ElementId> active{0, 1, 2};
    BeckBreaker breaker;
    breaker.start_stage(board, active, gf, 1);
    GameState s = fresh_state(board, active, 1);
    apply_move_inplace(s, Player::Maker, std::vector<ElementId>{0});
    breaker.observe(std::vector<ElementId>{0});
    // both remaining elements carry weight 1/2; lowest id wins
    auto picks = breaker.choose(s);
    REQUIRE(picks.size() == 1);
    CHECK(picks[0] == 1);
}

TEST_CASE("incremental totals match recomputation through random play") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 25; ++rep) {
        Family f = testutil::random_family(rng, 12, 10, 2, 5);
        std::vector<std::vector<ElementId>> sets;
        for (const auto& g : f.groups)
            for (const auto& s : g.sets) sets.push_back(s);
        int b = 1 + static_cast<int>(rng() % 3);
        BeckState st(sets, 12, b);
        std::vector<ElementId> free(12);
        for (int i = 0; i < 12; ++i) free[static_cast<size_t>(i)] = i;
        bool maker = true;
        while (!free.empty()) {
            size_t idx = rng() % free.size();
            if (maker)
                st.maker_claim(free[idx]);
            else
                st.breaker_claim(free[idx]);
            free.erase(free.begin() + static_cast<long>(idx));
            maker = !maker;
            CHECK(st.total_weight() == doctest::Approx(st.recompute_total()).epsilon(1e-10));
        }
    }
}

TEST_CASE("Maker's completed sets stay under the weight bound") {
    // against the greedy weight Breaker, Maker completes at most
    // sum_F (1+b)^(-|F|+1) sets in one stage
    std::mt19937_64 rng(515);
    for (int rep = 0; rep < 30; ++rep) {
        Family f = testutil::random_family(rng, 14, 12, 2, 5);
        int b = 1 + static_cast<int>(rng() % 3);
        double bound = 0;
        for (const auto& g : f.groups)
            for (const auto& s : g.sets)
                bound += std::pow(1.0 + b, 1.0 - static_cast<double>(s.size()));

        Board board = abstract_board(14);
        GameFamily gf = GameFamily::explicit_family(f);
        std::vector<ElementId> active(14);
        for (int i = 0; i < 14; ++i) active[static_cast<size_t>(i)] = i;
        RandomStrategy maker(Player::Maker, derive_seed(7, static_cast<std::uint64_t>(rep)));
        BeckBreaker breaker;
        StageOutcome out = play_stage(board, active, gf, b, maker, breaker, Variant::Standard);
        REQUIRE(!out.forfeit);
        std::size_t completed = 0;
        for (std::size_t c : out.reduction.survivors_per_group) completed += c;
        CHECK(static_cast<double>(completed) <= bound + 1e-9);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/baseline.hpp"
#include "mbg/bunches.hpp"
#include "mbg/engine.hpp"
#include "mbg/errors.hpp"
#include "mbg/family_builders.hpp"
#include "mbg/hgame_breaker.hpp"

#include <cmath>

using namespace mbg;

TEST_CASE("choose_K picks the densest subgraph, smallest on ties") {
    // K4 minus an edge: the whole graph and its triangles tie at 2-density 2
    SimpleGraph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    SimpleGraph k = choose_K(k4e);
    CHECK(k.n == 3);
    CHECK(k.edge_count() == 3);

    SimpleGraph k4 = choose_K(complete_graph(4));
    CHECK(k4.n == 4);
    CHECK(k4.edge_count() == 6);

    SimpleGraph p = choose_K(path_graph(4));
    CHECK(max_2_density(p) == max_2_density(path_graph(4)));

    CHECK_THROWS(choose_K(complete_graph(2)));
}

TEST_CASE("bunch parameter derivation satisfies the slack inequality") {
    SimpleGraph k3 = complete_graph(3);
    for (double eps : {0.3, 0.5, 1.0, 2.0}) {
        BunchParams p = derive_bunch_params(k3, eps, BunchParams{});
        double m2 = 2.0;
        if (p.from_config) continue;
        CHECK(p.delta == doctest::Approx(0.9 * eps * m2 * m2 / (4.0 + eps * m2)));
        double d = m2 - p.delta;
        double vk = 3.0;
        auto lhs = [&](int t) { return (t + 2) * vk / (d * t * vk - 1.0); };
        double rhs = 1.0 / d + eps / 4.0;
        CHECK(lhs(p.t) < rhs);
        if (p.t > 1 && d * (p.t - 1) * vk - 1.0 > 0.0) CHECK(lhs(p.t - 1) >= rhs);
    }
    // an impossible eps cannot derive and falls back to the config
    BunchParams fallback{7, 0.25, true};
    BunchParams got = derive_bunch_params(k3, 1e-9, fallback);
    CHECK(got.from_config);
    CHECK(got.t == 7);
    CHECK(got.delta == 0.25);
}

TEST_CASE("bunch enumeration ranges") {
    SimpleGraph k3 = complete_graph(3);

    // t=2 needs 6 vertices; K5 has none
    Family none = enumerate_bunch_family(5, k3, 2, 0.5);
    CHECK(none.empty());

    // t=1 on K4: 4 triangles and 6 copies of K4 minus an edge
    Family small = enumerate_bunch_family(4, k3, 1, 1.1);
    REQUIRE(small.groups.size() == 1);
    CHECK(small.groups[0].name == "BUNCH");
    CHECK(small.total_sets() == 10);
    int triangles = 0, diamonds = 0;
    for (const auto& s : small.groups[0].sets) {
        if (s.size() == 3) ++triangles;
        if (s.size() == 5) ++diamonds;
    }
    CHECK(triangles == 4);
    CHECK(diamonds == 6);

    // a lone triangle has density 1 < 2 - 0.5: the floor must trip
    CHECK_THROWS_AS(enumerate_bunch_family(4, k3, 1, 0.5), invariant_violation);

    // t=2 on K6: every bunch is a 4-chain on 6 vertices with >= 9 edges
    Family six = enumerate_bunch_family(6, k3, 2, 0.5);
    CHECK(!six.empty());
    for (const auto& s : six.groups[0].sets) {
        CHECK(s.size() >= 9);
        CHECK(s.size() <= 15);
    }

    // the state cap trips on larger hosts
    CHECK_THROWS_AS(enumerate_bunch_family(8, k3, 2, 0.5, 100), family_too_large);
}

TEST_CASE("phase-1 stage count") {
    SimpleGraph k3 = complete_graph(3);
    HGameBreaker br(7, k3, 1, 0.5, BunchParams{}, 500000);
    // ceil((1/2 + 1/4) * log_2 7) = 3
    CHECK(br.phase1_stages() == 3);
    CHECK(br.k_graph().n == 3);

    HGameBreaker br2(6, k3, 2, 0.5, BunchParams{}, 500000);
    // ceil(0.75 * log_3 6) = 2
    CHECK(br2.phase1_stages() == 2);
}

TEST_CASE("phase transitions and play against a random maker") {
    SimpleGraph k3 = complete_graph(3);
    Board board = complete_graph_board(7);
    GameFamily gf = GameFamily::explicit_family(h_copies_family(7, k3));
    // force small bunch parameters so phase 1 has real targets
    HGameBreaker breaker(7, k3, 1, 3.0, BunchParams{}, 500000);
    RandomStrategy maker(Player::Maker, derive_seed(2024, 0));
    MatchTrace t = play_multistage(board, gf, 1, maker, breaker, Variant::Standard, 16);
    REQUIRE(!t.forfeit);
    CHECK(t.tau_observed <= 4);
    validate_trace(board, gf, t);
}

TEST_CASE("phase-2 response stays in the maker's territory when possible") {
    SimpleGraph k3 = complete_graph(3);
    Board board = complete_graph_board(6);
    GameFamily gf = GameFamily::explicit_family(h_copies_family(6, k3));
    HGameBreaker breaker(6, k3, 1, 0.5, BunchParams{}, 500000);
    // skip phase 1 by replaying start_stage until phase 2
    std::vector<ElementId> active(15);
    for (int i = 0; i < 15; ++i) active[static_cast<size_t>(i)] = i;
    for (int s = 0; s <= breaker.phase1_stages(); ++s)
        breaker.start_stage(board, active, gf, 1);
    CHECK(!breaker.in_phase1());

    GameState st = fresh_state(board, active, 1);
    ElementId mv = board.edge_id(0, 1);
    apply_move_inplace(st, Player::Maker, std::vector<ElementId>{mv});
    breaker.observe(std::vector<ElementId>{mv});
    auto picks = breaker.choose(st);
    REQUIRE(picks.size() == 1);
    // the full K6 is one big collection, so any edge qualifies; the pick must
    // at least be a free edge
    CHECK(st.is_free(picks[0]));
}

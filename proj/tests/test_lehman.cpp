#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/baseline.hpp"
#include "mbg/beck.hpp"
#include "mbg/engine.hpp"
#include "mbg/lehman.hpp"

#include <cmath>

using namespace mbg;

namespace {

// replays a fixed sequence of free-list indices
struct IndexedBreaker : Strategy {
    std::vector<std::size_t> picks;
    std::size_t next = 0;
    void start_stage(const Board&, const std::vector<ElementId>&, const GameFamily&, int) override {}
    void observe(const std::vector<ElementId>&) override {}
    std::vector<ElementId> choose(const GameState& state) override {
        auto free = state.free_elements();
        std::size_t idx = next < picks.size() ? picks[next] : 0;
        ++next;
        return {free[idx % free.size()]};
    }
};

int floor_log2(int n) {
    int k = 0;
    while ((1 << (k + 1)) <= n) ++k;
    return k;
}

} // namespace

TEST_CASE("K4: Maker connects against every Breaker line") {
    // one stage on K4, bias 1: Breaker moves at free counts 5, 3, 1
    Board board = complete_graph_board(4);
    GameFamily gf = GameFamily::connectivity(4);
    std::vector<ElementId> active{0, 1, 2, 3, 4, 5};
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            LehmanMaker maker;
            IndexedBreaker breaker;
            breaker.picks = {a, b, 0};
            StageOutcome out = play_stage(board, active, gf, 1, maker, breaker, Variant::Standard);
            REQUIRE(!out.forfeit);
            CHECK(out.reduction.survived);
            CHECK(out.reduction.next_board.size() == 3); // a spanning tree of K4
        }
}

TEST_CASE("pairing layout on K8") {
    Board board = complete_graph_board(8);
    GameFamily gf = GameFamily::connectivity(8);
    LehmanMaker maker;
    std::vector<ElementId> active(28);
    for (int i = 0; i < 28; ++i) active[static_cast<size_t>(i)] = i;
    maker.start_stage(board, active, gf, 1);
    CHECK(maker.pair_count() == 2); // 4 trees, 2 pairs
    for (int i = 0; i < 2; ++i) {
        CHECK(maker.pair(i).components == 8);
        CHECK(maker.pair(i).trees[0].size() == 7);
        CHECK(maker.pair(i).trees[1].size() == 7);
    }
}

TEST_CASE("multistage survival floor against heuristic Breakers") {
    for (int n : {8, 12, 16}) {
        int floor_bound = floor_log2(n) - 1;
        Board board = complete_graph_board(n);
        GameFamily gf = GameFamily::connectivity(n);

        for (int which = 0; which < 3; ++which) {
            LehmanMaker maker;
            std::unique_ptr<Strategy> breaker;
            if (which == 0)
                breaker = std::make_unique<RandomStrategy>(Player::Breaker, derive_seed(31, n));
            else if (which == 1)
                breaker = std::make_unique<GreedyBreaker>();
            else
                breaker = std::make_unique<BeckBreaker>();
            MatchTrace t = play_multistage(board, gf, 1, maker, *breaker, Variant::Standard, 16);
            REQUIRE(!t.forfeit);
            CHECK(t.tau_observed >= floor_bound);
            validate_trace(board, gf, t);
        }
    }
}

TEST_CASE("carried trees shrink by roughly half each stage") {
    Board board = complete_graph_board(16);
    GameFamily gf = GameFamily::connectivity(16);
    LehmanMaker maker;
    RandomStrategy breaker(Player::Breaker, derive_seed(99, 0));
    MatchTrace t = play_multistage(board, gf, 1, maker, breaker, Variant::Standard, 16);
    REQUIRE(!t.forfeit);
    // each surviving stage halves the edge budget: board sizes strictly drop
    for (size_t i = 1; i < t.stages.size(); ++i)
        CHECK(t.stages[i].board_size < t.stages[i - 1].board_size);
    CHECK(t.tau_observed >= 3); // floor(log2 16) - 1
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mbg/errors.hpp"
#include "mbg/family_builders.hpp"

#include <set>

using namespace mbg;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("rounded sizes clamp at 1") {
    CHECK(rounded_size(0.2) == 1);
    CHECK(rounded_size(2.5) == 3);
    CHECK(rounded_size(-3.0) == 1);
}

TEST_CASE("clique and cross edge sets") {
    Board b = complete_graph_board(5);
    auto clique = clique_edge_set(b, {0, 2, 4});
    CHECK(clique.size() == 3);
    CHECK(std::is_sorted(clique.begin(), clique.end()));
    auto cross = cross_edge_set(b, {0, 1}, {3, 4});
    CHECK(cross.size() == 4);
    for (ElementId e : cross) {
        auto [u, v] = b.edge(e);
        bool left_a = u == 0 || u == 1;
        CHECK(left_a);
        CHECK((v == 3 || v == 4));
    }
}

TEST_CASE("coloring family enumerates cliques of size ceil(n/k)") {
    Family f = coloring_family(8, 2);
    auto stats = family_stats(f);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].count == 70); // C(8,4)
    CHECK(stats[0].min_size == 6); // C(4,2) edges
    for (const auto& s : f.groups[0].sets) CHECK(s.size() == 6);

    // odd split: ceil(7/3) = 3-cliques
    Family f2 = coloring_family(7, 3);
    auto st2 = family_stats(f2);
    CHECK(st2[0].count == 35);
    CHECK(st2[0].min_size == 3);

    CHECK_THROWS_AS(coloring_family(4, 4), std::invalid_argument); // ceil=1 trivial
}

TEST_CASE("hamilton families at a small scale") {
    // n=9, eps=1: s=2 groups
    Family f = hamilton_families(9, 1.0);
    auto stats = family_stats(f);
    REQUIRE(stats.size() == 2);
    // F1: |A|=round(9^0)=1, |B|=round(9-4.5)=5 -> 9*C(8,5) sets of 5 edges
    CHECK(stats[0].name == "F1");
    CHECK(stats[0].count == 9 * 56);
    CHECK(stats[0].min_size == 5);
    // F2: |A|=|B|=round(9/ln 9)=4, unordered pairs
    CHECK(stats[1].count == 126 * 5 / 2);
    CHECK(stats[1].min_size == 16);

    // every set is a genuine cross family member: distinct sorted ids
    for (const auto& g : f.groups)
        for (const auto& s : g.sets) {
            CHECK(std::is_sorted(s.begin(), s.end()));
            CHECK(std::set<ElementId>(s.begin(), s.end()).size() == s.size());
        }
}

TEST_CASE("hamilton family group sizes at n=16, eps=1/2") {
    // the full n=16 family is ~1.7M sets; a tiny cap must trip before that
    CHECK_THROWS_AS(hamilton_families(16, 0.5, 1000), family_too_large);
    try {
        hamilton_families(16, 0.5, 1000);
    } catch (const family_too_large& ex) {
        CHECK(ex.estimated_count > 0);
    }
}

TEST_CASE("pancyclicity families") {
    Family f = pancyclicity_families(9, 1.0);
    auto stats = family_stats(f);
    REQUIRE(stats.size() == 3);
    CHECK(stats[0].name == "F1"); // C(9,3) triangles
    CHECK(stats[0].count == 84);
    CHECK(stats[0].min_size == 3);
    CHECK(stats[1].count == 9 * 28); // star minus c*sqrt(n): 1 x 6 cross sets
    CHECK(stats[1].min_size == 6);
    CHECK(stats[2].count == 84 * 20 / 2); // 3x3 cross, unordered
    CHECK(stats[2].min_size == 9);

    // default c=700 cannot fit on a desk board
    CHECK_THROWS_AS(pancyclicity_families(9), std::invalid_argument);
}

TEST_CASE("h-copy families") {
    SimpleGraph k3 = complete_graph(3);
    Family f = h_copies_family(5, k3);
    auto stats = family_stats(f);
    CHECK(stats[0].count == 10); // C(5,3) triangles
    CHECK(stats[0].min_size == 3);

    SimpleGraph p3 = path_graph(3);
    Family fp = h_copies_family(4, p3);
    // paths on 3 labeled vertices in K4: C(4,3)*3 distinct edge pairs
    CHECK(family_stats(fp)[0].count == 12);

    CHECK_THROWS_AS(h_copies_family(2, k3), std::invalid_argument);
    CHECK_THROWS_AS(h_copies_family(9, k3, 10), family_too_large);
}

TEST_CASE("family caps report the estimate") {
    try {
        coloring_family(16, 2, 100);
        FAIL("expected family_too_large");
    } catch (const family_too_large& ex) {
        CHECK(ex.estimated_count == binomial(16, 8));
    }
}

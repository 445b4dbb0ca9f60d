// Compares a serial game sweep against the OpenMP one. Each game is an
// independent multistage match, so the sweep parallelizes trivially; the
// interesting number is the speedup on a real strategy pairing.

#include "mbg/baseline.hpp"
#include "mbg/beck.hpp"
#include "mbg/engine.hpp"
#include "mbg/family_builders.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mbg;
using clk = std::chrono::steady_clock;

namespace {

int run_one(const Board& board, const GameFamily& gf, std::uint64_t seed) {
    RandomStrategy maker(Player::Maker, derive_seed(seed, 0));
    BeckBreaker breaker;
    MatchTrace t = play_multistage(board, gf, 1, maker, breaker, Variant::Standard, 32);
    return t.tau_observed;
}

double sweep(const Board& board, const GameFamily& gf, int reps, bool parallel, long long* tau_sum) {
    auto t0 = clk::now();
    long long acc = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : acc) if (parallel)
    for (int r = 0; r < reps; ++r) acc += run_one(board, gf, static_cast<std::uint64_t>(r));
    *tau_sum = acc;
    return std::chrono::duration<double>(clk::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 10;
    int reps = argc > 2 ? std::atoi(argv[2]) : 200;
    Board board = complete_graph_board(n);
    GameFamily gf = GameFamily::explicit_family(coloring_family(n, 2));

    long long serial_sum = 0, parallel_sum = 0;
    double warm = sweep(board, gf, std::min(reps, 8), false, &serial_sum);
    (void)warm;
    double ts = sweep(board, gf, reps, false, &serial_sum);
    double tp = sweep(board, gf, reps, true, &parallel_sum);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("coloring K%d, %d games, random maker vs beck breaker\n", n, reps);
    std::printf("serial:   %.3fs (tau sum %lld)\n", ts, serial_sum);
    std::printf("parallel: %.3fs on %d threads (tau sum %lld)\n", tp, threads, parallel_sum);
    if (serial_sum != parallel_sum) {
        std::printf("MISMATCH: parallel sweep changed the results\n");
        return 1;
    }
    std::printf("speedup:  %.2fx\n", ts / tp);
    return 0;
}

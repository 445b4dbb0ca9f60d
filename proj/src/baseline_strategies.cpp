#include "mbg/baseline.hpp"

#include <algorithm>

namespace mbg {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    // splitmix64 over master ^ golden-ratio-scaled counter
    std::uint64_t z = master ^ (counter * 0x9e3779b97f4a7c15ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<ElementId> RandomStrategy::choose(const GameState& state) {
    std::vector<ElementId> free = state.free_elements();
    int want = role_ == Player::Maker ? 1 : std::min(bias_, static_cast<int>(free.size()));
    std::vector<ElementId> out;
    for (int i = 0; i < want; ++i) {
        std::uniform_int_distribution<size_t> dist(0, free.size() - 1);
        size_t idx = dist(rng_);
        out.push_back(free[idx]);
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

void GreedyBreaker::start_stage(const Board& board, const std::vector<ElementId>& active,
                                const GameFamily& family, int bias) {
    targets_ = family.breaker_targets(board, active);
    bias_ = bias;
}

std::vector<ElementId> GreedyBreaker::choose(const GameState& state) {
    std::vector<ElementId> out;
    int want = std::min(bias_, state.free_count);
    std::vector<char> claimed_now(static_cast<size_t>(state.board.elements), 0);
    for (int pick = 0; pick < want; ++pick) {
        std::vector<int> score(static_cast<size_t>(state.board.elements), 0);
        for (const auto& t : targets_) {
            bool alive = true;
            for (ElementId e : t)
                if (state.ownership[static_cast<size_t>(e)] == Owner::Breaker ||
                    claimed_now[static_cast<size_t>(e)]) {
                    alive = false;
                    break;
                }
            if (!alive) continue;
            for (ElementId e : t) ++score[static_cast<size_t>(e)];
        }
        ElementId best = -1;
        for (ElementId e : state.active)
            if (state.is_free(e) && !claimed_now[static_cast<size_t>(e)])
                if (best == -1 || score[static_cast<size_t>(e)] > score[static_cast<size_t>(best)])
                    best = e;
        out.push_back(best);
        claimed_now[static_cast<size_t>(best)] = 1;
    }
    return out;
}

} // namespace mbg

#pragma once

#include "mbg/engine.hpp"

#include <cstdint>
#include <random>

namespace mbg {

// Counter-mixed derivation of per-game seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter);

// Claims uniformly among free elements, without replacement within a turn.
class RandomStrategy : public Strategy {
public:
    RandomStrategy(Player role, std::uint64_t seed) : role_(role), rng_(seed) {}
    void start_stage(const Board&, const std::vector<ElementId>&, const GameFamily&, int bias) override {
        bias_ = bias;
    }
    void observe(const std::vector<ElementId>&) override {}
    std::vector<ElementId> choose(const GameState& state) override;

private:
    Player role_;
    std::mt19937_64 rng_;
    int bias_ = 1;
};

// Claims the free element contained in the most surviving target sets
// (sets with no Breaker element yet), lowest id on ties.
class GreedyBreaker : public Strategy {
public:
    void start_stage(const Board& board, const std::vector<ElementId>& active,
                     const GameFamily& family, int bias) override;
    void observe(const std::vector<ElementId>&) override {}
    std::vector<ElementId> choose(const GameState& state) override;

private:
    std::vector<std::vector<ElementId>> targets_;
    int bias_ = 1;
};

} // namespace mbg

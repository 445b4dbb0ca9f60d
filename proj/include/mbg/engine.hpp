#pragma once

#include "mbg/family.hpp"
#include "mbg/game_state.hpp"
#include "mbg/graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mbg {

// The winning condition of one multistage game. Explicit families are
// materialized winning sets; the connectivity kind stands for "all spanning
// trees of K_n", whose family is far too large to materialize beyond tiny n
// but whose survival test is just spanning connectivity of Maker's edges.
struct GameFamily {
    enum class Kind { Explicit, Connectivity } kind = Kind::Explicit;
    Family family; // Explicit only
    int n = 0;     // Connectivity only: vertex count

    static GameFamily explicit_family(Family f) {
        GameFamily gf;
        gf.kind = Kind::Explicit;
        gf.family = std::move(f);
        return gf;
    }
    static GameFamily connectivity(int n) {
        GameFamily gf;
        gf.kind = Kind::Connectivity;
        gf.n = n;
        return gf;
    }

    bool completed_by(const GameState& state) const;
    // Target sets for set-counting Breaker heuristics. For connectivity these
    // are the vertex stars of the current board (break one to disconnect).
    std::vector<std::vector<ElementId>> breaker_targets(const Board& board,
                                                        const std::vector<ElementId>& active) const;
};

struct EngineReduction {
    std::vector<ElementId> next_board;
    GameFamily next_family;
    std::vector<std::size_t> survivors_per_group;
    bool survived = false; // next family nonempty
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual void start_stage(const Board& board, const std::vector<ElementId>& active,
                             const GameFamily& family, int bias) = 0;
    virtual void observe(const std::vector<ElementId>& opponent_move) = 0;
    // Returns the elements to claim this turn: exactly one for Maker,
    // exactly min(bias, free) for Breaker.
    virtual std::vector<ElementId> choose(const GameState& state) = 0;
    virtual void end_stage(const EngineReduction&) {}
};

struct Forfeit {
    Player by;
    std::string reason;
};

struct StageTrace {
    int stage = 0;
    std::size_t board_size = 0;
    std::vector<Move> moves;
    std::vector<std::size_t> survivors;
    bool survived = false;
};

struct MatchTrace {
    Variant variant = Variant::Standard;
    int bias = 1;
    std::vector<StageTrace> stages;
    int tau_observed = 0;
    bool truncated = false;
    std::optional<Forfeit> forfeit;
};

struct StageOutcome {
    StageTrace trace;
    EngineReduction reduction;
    std::optional<Forfeit> forfeit;
};

StageOutcome play_stage(const Board& board, const std::vector<ElementId>& active,
                        const GameFamily& family, int bias, Strategy& maker, Strategy& breaker,
                        Variant variant, int stage_index = 1);

MatchTrace play_multistage(const Board& board, const GameFamily& family, int bias, Strategy& maker,
                           Strategy& breaker, Variant variant, int max_stages = 64);

// Replays a trace through the core rules; throws invariant_violation on any
// mismatch between recorded and recomputed reductions or tau.
void validate_trace(const Board& board, const GameFamily& family, const MatchTrace& trace);

} // namespace mbg

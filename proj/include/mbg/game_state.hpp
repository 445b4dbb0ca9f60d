#pragma once

#include "mbg/board.hpp"
#include "mbg/family.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mbg {

enum class Owner : unsigned char { Free, Maker, Breaker };
enum class Player : unsigned char { Maker, Breaker };

enum class Variant : unsigned char { Standard, Stop };

struct Move {
    Player player;
    std::vector<ElementId> elements;
};

// In-stage state. `active` marks the elements of the current stage board;
// ownership of inactive elements is meaningless. Ownership only ever moves
// Free -> {Maker, Breaker} within a stage.
struct GameState {
    Board board;
    std::vector<ElementId> active; // sorted
    std::vector<Owner> ownership;  // indexed by global element id
    int stage = 1;
    int bias = 1;
    int free_count = 0;
    std::vector<Move> history;

    bool is_active(ElementId e) const;
    bool is_free(ElementId e) const { return is_active(e) && ownership[static_cast<size_t>(e)] == Owner::Free; }
    std::vector<ElementId> free_elements() const;
    std::vector<ElementId> owned_by(Player p) const;
};

GameState fresh_state(const Board& board, std::vector<ElementId> active, int bias, int stage = 1);
GameState fresh_state(const Board& board, int bias); // whole board active

// Validates and applies one move in place. Throws illegal_move on a claim of
// a non-free element, a Maker multi-claim, or a Breaker over-claim.
void apply_move_inplace(GameState& state, Player player, std::span<const ElementId> elements);

// Value-semantics variant of the same operation.
GameState apply_move(GameState state, Player player, std::span<const ElementId> elements);

struct StageReduction {
    std::vector<ElementId> next_board;            // X_i, sorted
    Family next_family;                           // F_i (empty groups removed? kept, see note)
    std::vector<std::size_t> survivors_per_group; // aligned with family.groups
};

// Standard mode: X_i = Maker's elements, F_i = sets fully inside X_i; requires
// the whole board to be claimed. Stop mode: X_i = Maker's elements plus free
// elements; callable once Maker completed a set or the board is exhausted.
StageReduction reduce_stage(const GameState& state, const Family& family, Variant variant);

// True when some winning set lies entirely inside Maker's claimed elements.
bool maker_completed_set(const GameState& state, const Family& family);

} // namespace mbg

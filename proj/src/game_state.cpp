#include "mbg/game_state.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mbg {

bool GameState::is_active(ElementId e) const {
    if (e < 0 || e >= board.elements) return false;
    return std::binary_search(active.begin(), active.end(), e);
}

std::vector<ElementId> GameState::free_elements() const {
    std::vector<ElementId> out;
    for (ElementId e : active)
        if (ownership[static_cast<size_t>(e)] == Owner::Free) out.push_back(e);
    return out;
}

std::vector<ElementId> GameState::owned_by(Player p) const {
    Owner want = p == Player::Maker ? Owner::Maker : Owner::Breaker;
    std::vector<ElementId> out;
    for (ElementId e : active)
        if (ownership[static_cast<size_t>(e)] == want) out.push_back(e);
    return out;
}

GameState fresh_state(const Board& board, std::vector<ElementId> active, int bias, int stage) {
    if (bias < 1) throw std::invalid_argument("bias must be >= 1");
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    if (!active.empty() && (active.front() < 0 || active.back() >= board.elements))
        throw std::invalid_argument("active elements outside the board");
    GameState s;
    s.board = board;
    s.active = std::move(active);
    s.ownership.assign(static_cast<size_t>(board.elements), Owner::Free);
    s.stage = stage;
    s.bias = bias;
    s.free_count = static_cast<int>(s.active.size());
    return s;
}

GameState fresh_state(const Board& board, int bias) {
    std::vector<ElementId> all(static_cast<size_t>(board.elements));
    std::iota(all.begin(), all.end(), 0);
    return fresh_state(board, std::move(all), bias);
}

void apply_move_inplace(GameState& state, Player player, std::span<const ElementId> elements) {
    if (elements.empty()) throw illegal_move("empty move");
    if (player == Player::Maker) {
        if (elements.size() != 1) throw illegal_move("Maker must claim exactly one element");
    } else {
        int quota = std::min(state.bias, state.free_count);
        if (static_cast<int>(elements.size()) > quota)
            throw illegal_move("Breaker claimed " + std::to_string(elements.size()) +
                               " elements, quota is " + std::to_string(quota));
    }
    // Reject duplicates within the move as well as claims of non-free elements.
    for (size_t i = 0; i < elements.size(); ++i) {
        ElementId e = elements[i];
        if (!state.is_free(e))
            throw illegal_move("element " + std::to_string(e) + " is not free on this board");
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (elements[j] == e) throw illegal_move("duplicate element in move");
    }
    Owner owner = player == Player::Maker ? Owner::Maker : Owner::Breaker;
    for (ElementId e : elements) state.ownership[static_cast<size_t>(e)] = owner;
    state.free_count -= static_cast<int>(elements.size());
    state.history.push_back(Move{player, {elements.begin(), elements.end()}});
}

GameState apply_move(GameState state, Player player, std::span<const ElementId> elements) {
    apply_move_inplace(state, player, elements);
    return state;
}

bool maker_completed_set(const GameState& state, const Family& family) {
    for (const auto& group : family.groups)
        for (const auto& s : group.sets) {
            bool all = true;
            for (ElementId e : s)
                if (state.ownership[static_cast<size_t>(e)] != Owner::Maker) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    return false;
}

StageReduction reduce_stage(const GameState& state, const Family& family, Variant variant) {
    if (variant == Variant::Standard) {
        if (state.free_count != 0)
            throw invalid_state("reduce_stage(standard) called mid-stage: " +
                                std::to_string(state.free_count) + " elements still free");
    } else {
        if (state.free_count != 0 && !maker_completed_set(state, family))
            throw invalid_state("reduce_stage(stop) requires a completed winning set or an exhausted board");
    }

    StageReduction red;
    for (ElementId e : state.active) {
        Owner o = state.ownership[static_cast<size_t>(e)];
        if (o == Owner::Maker || (variant == Variant::Stop && o == Owner::Free))
            red.next_board.push_back(e);
    }

    red.next_family.groups.reserve(family.groups.size());
    for (const auto& group : family.groups) {
        FamilyGroup out;
        out.name = group.name;
        for (const auto& s : group.sets) {
            bool inside = std::includes(red.next_board.begin(), red.next_board.end(),
                                        s.begin(), s.end());
            if (inside) out.sets.push_back(s);
        }
        red.survivors_per_group.push_back(out.sets.size());
        red.next_family.groups.push_back(std::move(out));
    }
    return red;
}

} // namespace mbg

#include "mbg/engine.hpp"

#include "mbg/errors.hpp"

#include <algorithm>

namespace mbg {

namespace {

std::vector<std::pair<int, int>> maker_edges(const GameState& state) {
    std::vector<std::pair<int, int>> out;
    for (ElementId e : state.active)
        if (state.ownership[static_cast<size_t>(e)] == Owner::Maker)
            out.push_back(state.board.edge(e));
    return out;
}

Family filter_to_subboard(const Family& family, const std::vector<ElementId>& sub) {
    Family out;
    out.groups.reserve(family.groups.size());
    for (const auto& group : family.groups) {
        FamilyGroup g;
        g.name = group.name;
        for (const auto& s : group.sets)
            if (std::includes(sub.begin(), sub.end(), s.begin(), s.end())) g.sets.push_back(s);
        out.groups.push_back(std::move(g));
    }
    return out;
}

} // namespace

bool GameFamily::completed_by(const GameState& state) const {
    if (kind == Kind::Explicit) return maker_completed_set(state, family);
    return is_spanning_connected(n, maker_edges(state));
}

std::vector<std::vector<ElementId>> GameFamily::breaker_targets(
    const Board& board, const std::vector<ElementId>& active) const {
    if (kind == Kind::Explicit) {
        std::vector<std::vector<ElementId>> out;
        for (const auto& group : family.groups)
            for (const auto& s : group.sets) out.push_back(s);
        return out;
    }
    // connectivity: one star per vertex, restricted to the current board
    std::vector<std::vector<ElementId>> stars(static_cast<size_t>(n));
    for (ElementId e : active) {
        auto [u, v] = board.edge(e);
        stars[static_cast<size_t>(u)].push_back(e);
        stars[static_cast<size_t>(v)].push_back(e);
    }
    std::vector<std::vector<ElementId>> out;
    for (auto& s : stars)
        if (!s.empty()) out.push_back(std::move(s));
    return out;
}

namespace {

EngineReduction reduce(const GameState& state, const GameFamily& family, Variant variant) {
    EngineReduction red;
    if (family.kind == GameFamily::Kind::Explicit) {
        StageReduction core = reduce_stage(state, family.family, variant);
        red.next_board = std::move(core.next_board);
        red.survivors_per_group = std::move(core.survivors_per_group);
        red.survived = !core.next_family.empty();
        red.next_family = GameFamily::explicit_family(std::move(core.next_family));
    } else {
        for (ElementId e : state.active) {
            Owner o = state.ownership[static_cast<size_t>(e)];
            if (o == Owner::Maker || (variant == Variant::Stop && o == Owner::Free))
                red.next_board.push_back(e);
        }
        std::vector<std::pair<int, int>> edges;
        for (ElementId e : red.next_board) edges.push_back(state.board.edge(e));
        red.survived = is_spanning_connected(family.n, edges);
        red.survivors_per_group = {red.survived ? std::size_t{1} : std::size_t{0}};
        red.next_family = GameFamily::connectivity(family.n);
    }
    return red;
}

} // namespace

StageOutcome play_stage(const Board& board, const std::vector<ElementId>& active,
                        const GameFamily& family, int bias, Strategy& maker, Strategy& breaker,
                        Variant variant, int stage_index) {
    if (active.empty()) throw invalid_state("play_stage: empty board");
    GameState state = fresh_state(board, active, bias, stage_index);

    StageOutcome out;
    out.trace.stage = stage_index;
    out.trace.board_size = state.active.size();

    maker.start_stage(board, state.active, family, bias);
    breaker.start_stage(board, state.active, family, bias);

    bool stopped = false;
    while (state.free_count > 0 && !stopped) {
        // Maker's turn
        std::vector<ElementId> mv;
        try {
            mv = maker.choose(state);
            if (mv.size() != 1) throw illegal_move("Maker must claim exactly one element");
            apply_move_inplace(state, Player::Maker, mv);
        } catch (const illegal_move& ex) {
            out.forfeit = Forfeit{Player::Maker, ex.what()};
            break;
        }
        out.trace.moves.push_back(state.history.back());
        breaker.observe(mv);
        if (variant == Variant::Stop && family.completed_by(state)) {
            stopped = true;
            break;
        }
        if (state.free_count == 0) break;

        // Breaker's turn: must claim exactly min(bias, free); under-claiming is
        // only possible when fewer than `bias` free elements remain.
        int quota = std::min(bias, state.free_count);
        std::vector<ElementId> bv;
        try {
            bv = breaker.choose(state);
            if (static_cast<int>(bv.size()) != quota)
                throw illegal_move("Breaker must claim exactly " + std::to_string(quota) +
                                   " elements, got " + std::to_string(bv.size()));
            apply_move_inplace(state, Player::Breaker, bv);
        } catch (const illegal_move& ex) {
            out.forfeit = Forfeit{Player::Breaker, ex.what()};
            break;
        }
        out.trace.moves.push_back(state.history.back());
        maker.observe(bv);
    }

    if (out.forfeit) {
        // Aborted stage: a forfeiting Maker loses the stage, a forfeiting
        // Breaker concedes it (remaining elements go unclaimed; Maker keeps
        // what she has and the standard reduction is taken over her elements).
        GameState final = state;
        // Treat unclaimed elements as Breaker's for the reduction so that the
        // standard-mode precondition holds.
        for (ElementId e : final.active)
            if (final.ownership[static_cast<size_t>(e)] == Owner::Free)
                final.ownership[static_cast<size_t>(e)] = Owner::Breaker;
        final.free_count = 0;
        out.reduction = reduce(final, family, Variant::Standard);
    } else {
        out.reduction = reduce(state, family, variant);
    }
    out.trace.survivors = out.reduction.survivors_per_group;
    out.trace.survived = out.reduction.survived;
    maker.end_stage(out.reduction);
    breaker.end_stage(out.reduction);
    return out;
}

MatchTrace play_multistage(const Board& board, const GameFamily& family, int bias, Strategy& maker,
                           Strategy& breaker, Variant variant, int max_stages) {
    MatchTrace trace;
    trace.variant = variant;
    trace.bias = bias;

    std::vector<ElementId> active(static_cast<size_t>(board.elements));
    for (int i = 0; i < board.elements; ++i) active[static_cast<size_t>(i)] = i;

    GameFamily current = family;
    if (current.kind == GameFamily::Kind::Explicit)
        current.family = filter_to_subboard(current.family, active);

    bool nonempty = current.kind == GameFamily::Kind::Connectivity
                        ? true
                        : !current.family.empty();
    int stage = 1;
    while (nonempty && !active.empty()) {
        if (stage > max_stages) {
            trace.truncated = true;
            break;
        }
        StageOutcome out = play_stage(board, active, current, bias, maker, breaker, variant, stage);
        trace.stages.push_back(out.trace);
        if (out.forfeit) {
            trace.forfeit = out.forfeit;
            if (out.reduction.survived) trace.tau_observed = stage;
            break;
        }
        if (out.reduction.survived) trace.tau_observed = stage;
        nonempty = out.reduction.survived;
        active = std::move(out.reduction.next_board);
        current = std::move(out.reduction.next_family);
        ++stage;
    }
    return trace;
}

void validate_trace(const Board& board, const GameFamily& family, const MatchTrace& trace) {
    std::vector<ElementId> active(static_cast<size_t>(board.elements));
    for (int i = 0; i < board.elements; ++i) active[static_cast<size_t>(i)] = i;
    GameFamily current = family;
    if (current.kind == GameFamily::Kind::Explicit)
        current.family = filter_to_subboard(current.family, active);

    int tau = 0;
    for (const auto& st : trace.stages) {
        if (st.board_size != active.size())
            throw invariant_violation("trace replay: stage board size mismatch");
        GameState state = fresh_state(board, active, trace.bias, st.stage);
        for (const auto& mv : st.moves) apply_move_inplace(state, mv.player, mv.elements);
        bool aborted = trace.forfeit && &st == &trace.stages.back();
        if (aborted) {
            for (ElementId e : state.active)
                if (state.ownership[static_cast<size_t>(e)] == Owner::Free)
                    state.ownership[static_cast<size_t>(e)] = Owner::Breaker;
            state.free_count = 0;
        }
        EngineReduction red = reduce(state, current, aborted ? Variant::Standard : trace.variant);
        if (red.survivors_per_group != st.survivors || red.survived != st.survived)
            throw invariant_violation("trace replay: reduction mismatch at stage " +
                                      std::to_string(st.stage));
        if (red.survived) tau = st.stage;
        active = std::move(red.next_board);
        current = std::move(red.next_family);
    }
    if (tau != trace.tau_observed)
        throw invariant_violation("trace replay: tau mismatch");
}

} // namespace mbg

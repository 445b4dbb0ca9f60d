#include "mbg/solver.hpp"

#include "mbg/errors.hpp"
#include "mbg/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace mbg {

namespace {

using Mask = std::uint32_t;

// One stage's board mapped to local bit positions, with the winning condition
// evaluated on local masks.
struct StageContext {
    std::vector<ElementId> active; // sorted global ids; local bit i <-> active[i]
    int m = 0;
    Mask full = 0;
    bool connectivity = false;
    int n = 0;
    std::vector<std::pair<int, int>> labels; // local index -> edge, connectivity only
    std::vector<Mask> set_masks;             // explicit sets fully inside the board

    StageContext(const Board& board, const std::vector<ElementId>& act, const GameFamily& family) {
        active = act;
        std::sort(active.begin(), active.end());
        m = static_cast<int>(active.size());
        full = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
        if (family.kind == GameFamily::Kind::Connectivity) {
            connectivity = true;
            n = family.n;
            for (ElementId e : active) labels.push_back(board.edge(e));
        } else {
            std::vector<int> local(static_cast<size_t>(board.elements), -1);
            for (int i = 0; i < m; ++i) local[static_cast<size_t>(active[static_cast<size_t>(i)])] = i;
            for (const auto& g : family.family.groups)
                for (const auto& s : g.sets) {
                    Mask mask = 0;
                    bool inside = true;
                    for (ElementId e : s) {
                        int li = local[static_cast<size_t>(e)];
                        if (li < 0) {
                            inside = false;
                            break;
                        }
                        mask |= Mask{1} << li;
                    }
                    if (inside) set_masks.push_back(mask);
                }
        }
    }

    bool completed(Mask maker) const {
        if (connectivity) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                if ((maker >> i) & 1) edges.push_back(labels[static_cast<size_t>(i)]);
            return is_spanning_connected(n, edges);
        }
        for (Mask s : set_masks)
            if ((s & maker) == s) return true;
        return false;
    }

    // Can Maker still complete using everything not taken by Breaker?
    bool possible(Mask maker_or_free) const { return completed(maker_or_free); }

    std::vector<ElementId> to_global(Mask mask) const {
        std::vector<ElementId> out;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) out.push_back(active[static_cast<size_t>(i)]);
        return out;
    }
};

std::uint64_t pos_key(Mask maker, Mask breaker, bool maker_to_move) {
    return static_cast<std::uint64_t>(maker) | (static_cast<std::uint64_t>(breaker) << 25) |
           (static_cast<std::uint64_t>(maker_to_move) << 51);
}

// Visits subsets of `free` of exactly `k` bits; returns true when the visitor
// short-circuits.
template <typename F>
bool for_each_k_subset(Mask free, int k, Mask acc, int lowest, const F& visit) {
    if (k == 0) return visit(acc);
    for (int i = lowest; i < 32; ++i) {
        if (!((free >> i) & 1)) continue;
        if (for_each_k_subset(free, k - 1, acc | (Mask{1} << i), i + 1, visit)) return true;
    }
    return false;
}

struct SingleStageSolver {
    const StageContext& ctx;
    int b;
    BreakerBranching branching;
    std::unordered_map<std::uint64_t, char> memo;

    bool maker_wins(Mask maker, Mask breaker, bool maker_to_move) {
        if (ctx.completed(maker)) return true;
        Mask free = ctx.full & ~maker & ~breaker;
        if (!ctx.possible(maker | free)) return false;
        if (free == 0) return false;
        std::uint64_t key = pos_key(maker, breaker, maker_to_move);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second != 0;
        bool win;
        if (maker_to_move) {
            win = false;
            for (int i = 0; i < ctx.m && !win; ++i)
                if ((free >> i) & 1) win = maker_wins(maker | (Mask{1} << i), breaker, false);
        } else {
            int nfree = std::popcount(free);
            int take = std::min(b, nfree);
            win = true;
            auto try_size = [&](int k) {
                // short-circuit when Breaker finds a winning reply
                return for_each_k_subset(free, k, 0, 0, [&](Mask pick) {
                    return !maker_wins(maker, breaker | pick, true);
                });
            };
            if (branching == BreakerBranching::ExactClaim) {
                if (try_size(take)) win = false;
            } else {
                for (int k = 1; k <= take && win; ++k)
                    if (try_size(k)) win = false;
            }
        }
        memo[key] = win ? 1 : 0;
        return win;
    }
};

std::uint64_t global_mask(const Board& board, const std::vector<ElementId>& elems) {
    std::uint64_t mask = 0;
    (void)board;
    for (ElementId e : elems) mask |= std::uint64_t{1} << e;
    return mask;
}

struct TauSolver {
    const Board& board;
    const GameFamily& family;
    int b;
    Variant variant;
    std::unordered_map<std::uint64_t, int> stage_memo; // board mask -> tau

    bool family_nonempty_on(std::uint64_t board_mask) const {
        if (family.kind == GameFamily::Kind::Connectivity) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < board.elements; ++e)
                if ((board_mask >> e) & 1) edges.push_back(board.edge(e));
            return is_spanning_connected(family.n, edges);
        }
        for (const auto& g : family.family.groups)
            for (const auto& s : g.sets) {
                bool inside = true;
                for (ElementId e : s)
                    if (!((board_mask >> e) & 1)) {
                        inside = false;
                        break;
                    }
                if (inside) return true;
            }
        return false;
    }

    // tau of the game starting on board_mask, whose family is known nonempty.
    int tau(std::uint64_t board_mask) {
        auto it = stage_memo.find(board_mask);
        if (it != stage_memo.end()) return it->second;
        std::vector<ElementId> active;
        for (int e = 0; e < board.elements; ++e)
            if ((board_mask >> e) & 1) active.push_back(e);
        StageContext ctx(board, active, family);
        std::unordered_map<std::uint64_t, int> pos_memo;
        int value = stage_value(ctx, board_mask, 0, 0, true, pos_memo);
        stage_memo[board_mask] = value;
        return value;
    }

    int stage_end(std::uint64_t board_mask, std::uint64_t next_mask) {
        if (!family_nonempty_on(next_mask)) return 0;
        if (next_mask == board_mask) return kTauUnbounded; // reduction fixed point
        int sub = tau(next_mask);
        return sub >= kTauUnbounded ? kTauUnbounded : 1 + sub;
    }

    int stage_value(const StageContext& ctx, std::uint64_t board_mask, Mask maker, Mask breaker,
                    bool maker_to_move, std::unordered_map<std::uint64_t, int>& pos_memo) {
        Mask free = ctx.full & ~maker & ~breaker;
        if (variant == Variant::Stop && ctx.completed(maker)) {
            // next board: Maker's elements plus whatever is still free
            return stage_end(board_mask, global_mask(board, ctx.to_global(maker | free)));
        }
        if (free == 0) return stage_end(board_mask, global_mask(board, ctx.to_global(maker)));
        std::uint64_t key = pos_key(maker, breaker, maker_to_move);
        auto it = pos_memo.find(key);
        if (it != pos_memo.end()) return it->second;
        int value;
        if (maker_to_move) {
            value = 0;
            for (int i = 0; i < ctx.m; ++i)
                if ((free >> i) & 1)
                    value = std::max(value, stage_value(ctx, board_mask, maker | (Mask{1} << i),
                                                       breaker, false, pos_memo));
        } else {
            int take = std::min(b, std::popcount(free));
            value = kTauUnbounded + 1;
            for_each_k_subset(free, take, 0, 0, [&](Mask pick) {
                value = std::min(value,
                                 stage_value(ctx, board_mask, maker, breaker | pick, true, pos_memo));
                return value == 0; // cannot do better
            });
        }
        value = std::min(value, kTauUnbounded);
        pos_memo[key] = value;
        return value;
    }
};

} // namespace

Player solve_single_stage(const Board& board, const std::vector<ElementId>& active,
                          const GameFamily& family, int b, BreakerBranching branching,
                          std::size_t max_elements) {
    if (active.size() > max_elements || active.size() > 24)
        throw size_limit_error("solve_single_stage: board too large (" +
                               std::to_string(active.size()) + " elements)");
    if (b < 1) throw std::invalid_argument("solve_single_stage: bias must be >= 1");
    StageContext ctx(board, active, family);
    SingleStageSolver solver{ctx, b, branching, {}};
    return solver.maker_wins(0, 0, true) ? Player::Maker : Player::Breaker;
}

TauResult solve_tau_exact(const Board& board, const GameFamily& family, int b, Variant variant,
                          std::size_t max_elements) {
    if (static_cast<std::size_t>(board.elements) > max_elements || board.elements > 24)
        throw size_limit_error("solve_tau_exact: board too large (" +
                               std::to_string(board.elements) + " elements)");
    if (b < 1) throw std::invalid_argument("solve_tau_exact: bias must be >= 1");
    TauSolver solver{board, family, b, variant, {}};
    std::uint64_t full = board.elements == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << board.elements) - 1;
    if (!solver.family_nonempty_on(full)) return TauResult{0, false};
    int v = solver.tau(full);
    if (v >= kTauUnbounded) return TauResult{kTauUnbounded, true};
    return TauResult{v, false};
}

void ExactSingleStageStrategy::start_stage(const Board& board,
                                           const std::vector<ElementId>& active,
                                           const GameFamily& family, int bias) {
    board_ = board;
    active_ = active;
    family_ = family;
    bias_ = bias;
}

std::vector<ElementId> ExactSingleStageStrategy::choose(const GameState& state) {
    StageContext ctx(board_, active_, family_);
    std::vector<int> local(static_cast<size_t>(board_.elements), -1);
    for (int i = 0; i < ctx.m; ++i) local[static_cast<size_t>(ctx.active[static_cast<size_t>(i)])] = i;
    Mask maker = 0, breaker = 0;
    for (ElementId e : ctx.active) {
        Owner o = state.ownership[static_cast<size_t>(e)];
        if (o == Owner::Maker) maker |= Mask{1} << local[static_cast<size_t>(e)];
        if (o == Owner::Breaker) breaker |= Mask{1} << local[static_cast<size_t>(e)];
    }
    Mask free = ctx.full & ~maker & ~breaker;
    SingleStageSolver solver{ctx, bias_, BreakerBranching::ExactClaim, {}};
    if (role_ == Player::Maker) {
        ElementId fallback = -1;
        for (int i = 0; i < ctx.m; ++i) {
            if (!((free >> i) & 1)) continue;
            if (fallback == -1) fallback = ctx.active[static_cast<size_t>(i)];
            if (solver.maker_wins(maker | (Mask{1} << i), breaker, false))
                return {ctx.active[static_cast<size_t>(i)]};
        }
        if (fallback == -1) throw invalid_state("exact strategy: no free element");
        return {fallback};
    }
    int take = std::min(bias_, std::popcount(free));
    Mask chosen = 0;
    bool found = for_each_k_subset(free, take, 0, 0, [&](Mask pick) {
        if (!solver.maker_wins(maker, breaker | pick, true)) {
            chosen = pick;
            return true;
        }
        return false;
    });
    if (!found) {
        // losing anyway: claim the lowest free elements
        for (int i = 0; i < ctx.m && std::popcount(chosen) < take; ++i)
            if ((free >> i) & 1) chosen |= Mask{1} << i;
    }
    return ctx.to_global(chosen);
}

} // namespace mbg

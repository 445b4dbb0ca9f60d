#include "mbg/hgame_breaker.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mbg {

SimpleGraph choose_K(const SimpleGraph& h) {
    if (h.n < 3) throw std::invalid_argument("choose_K: H needs at least 3 vertices");
    Rational best(-1, 1);
    std::uint64_t best_mask = 0;
    int best_v = h.n + 1;
    for (std::uint64_t mask = 1; mask < (1ull << h.n); ++mask) {
        int v = std::popcount(mask);
        if (v < 3) continue;
        int e = 0;
        for (auto [a, b] : h.edges)
            if (((mask >> a) & 1) && ((mask >> b) & 1)) ++e;
        Rational d(e - 1, v - 2);
        if (d > best || (d == best && (v < best_v || (v == best_v && mask < best_mask)))) {
            best = d;
            best_mask = mask;
            best_v = v;
        }
    }
    std::vector<int> vertices;
    for (int v = 0; v < h.n; ++v)
        if ((best_mask >> v) & 1) vertices.push_back(v);
    std::vector<int> relabel(static_cast<size_t>(h.n), -1);
    for (size_t i = 0; i < vertices.size(); ++i) relabel[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : h.edges)
        if (relabel[static_cast<size_t>(a)] >= 0 && relabel[static_cast<size_t>(b)] >= 0)
            edges.push_back({relabel[static_cast<size_t>(a)], relabel[static_cast<size_t>(b)]});
    return SimpleGraph(static_cast<int>(vertices.size()), std::move(edges));
}

BunchParams derive_bunch_params(const SimpleGraph& K, double eps, const BunchParams& config) {
    if (!(eps > 0.0)) throw std::invalid_argument("derive_bunch_params: eps must be positive");
    double m2 = max_2_density(K).value();
    double delta = 0.9 * eps * m2 * m2 / (4.0 + eps * m2);
    double d = m2 - delta;
    double vk = static_cast<double>(K.n);
    for (int t = 1; t <= 1000; ++t) {
        double denom = d * t * vk - 1.0;
        if (denom <= 0.0) continue;
        if ((t + 2) * vk / denom < 1.0 / d + eps / 4.0)
            return BunchParams{t, delta, false};
    }
    return config;
}

HGameBreaker::HGameBreaker(int n, const SimpleGraph& h, int b, double eps, BunchParams config,
                           std::size_t bunch_cap) {
    if (b < 1) throw std::invalid_argument("HGameBreaker: bias must be >= 1");
    k_ = choose_K(h);
    params_ = derive_bunch_params(k_, eps, config);
    double m2 = max_2_density(k_).value();
    double stages = (1.0 / m2 + eps / 2.0) * std::log(static_cast<double>(n)) /
                    std::log(static_cast<double>(b) + 1.0);
    phase1_stages_ = static_cast<int>(std::ceil(stages));
    bunches_ = enumerate_bunch_family(n, k_, params_.t, params_.delta, bunch_cap);
}

void HGameBreaker::start_stage(const Board& board, const std::vector<ElementId>& active,
                               const GameFamily&, int bias) {
    ++stage_;
    last_maker_edge_ = -1;
    if (in_phase1()) {
        // restrict the bunch targets to sets fully on the current board
        std::vector<char> on_board(static_cast<size_t>(board.elements), 0);
        for (ElementId e : active) on_board[static_cast<size_t>(e)] = 1;
        std::vector<std::vector<ElementId>> targets;
        for (const auto& g : bunches_.groups)
            for (const auto& s : g.sets) {
                bool inside = true;
                for (ElementId e : s)
                    if (!on_board[static_cast<size_t>(e)]) {
                        inside = false;
                        break;
                    }
                if (inside) targets.push_back(s);
            }
        beck_ = std::make_unique<BeckState>(targets, board.elements, bias);
        return;
    }
    beck_.reset();
    if (!board.labeled()) throw std::invalid_argument("HGameBreaker requires an edge-labeled board");
    std::vector<std::pair<int, int>> edge_list;
    for (ElementId e : active) edge_list.push_back(board.edge(e));
    SimpleGraph g(board.n, std::move(edge_list));
    CollectionReport report = k_collections(g, k_);
    territories_.clear();
    edge_territory_.assign(static_cast<size_t>(board.elements), -1);
    for (const auto& col : report.collections) {
        std::vector<ElementId> edges;
        for (const auto& copy : col.copies)
            for (auto [u, v] : copy.edges) edges.push_back(board.edge_id(u, v));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        int ti = static_cast<int>(territories_.size());
        for (ElementId e : edges) edge_territory_[static_cast<size_t>(e)] = ti;
        territories_.push_back(std::move(edges));
    }
}

void HGameBreaker::observe(const std::vector<ElementId>& opponent_move) {
    for (ElementId e : opponent_move) {
        last_maker_edge_ = e;
        if (beck_) beck_->maker_claim(e);
    }
}

std::vector<ElementId> HGameBreaker::choose(const GameState& state) {
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(state.bias),
                                             static_cast<std::size_t>(state.free_count));
    std::vector<ElementId> picks;
    std::vector<char> taken(static_cast<size_t>(state.board.elements), 0);
    auto take = [&](ElementId e) {
        picks.push_back(e);
        taken[static_cast<size_t>(e)] = 1;
        if (beck_) beck_->breaker_claim(e);
    };

    if (beck_) {
        while (picks.size() < want) {
            ElementId best = -1;
            double best_w = -1.0;
            for (ElementId e : state.active) {
                if (!state.is_free(e) || taken[static_cast<size_t>(e)]) continue;
                double w = beck_->element_weight(e);
                if (w > best_w) {
                    best_w = w;
                    best = e;
                }
            }
            if (best == -1) break;
            take(best);
        }
        return picks;
    }

    int ti = last_maker_edge_ >= 0 ? edge_territory_[static_cast<size_t>(last_maker_edge_)] : -1;
    if (ti >= 0) {
        for (ElementId e : territories_[static_cast<size_t>(ti)]) {
            if (picks.size() >= want) break;
            if (state.is_free(e) && !taken[static_cast<size_t>(e)]) take(e);
        }
    }
    for (ElementId e : state.active) {
        if (picks.size() >= want) break;
        if (state.is_free(e) && !taken[static_cast<size_t>(e)]) take(e);
    }
    return picks;
}

} // namespace mbg

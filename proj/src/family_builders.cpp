#include "mbg/family_builders.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace mbg {

int rounded_size(double x) { return std::max(1, static_cast<int>(std::llround(x))); }

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

std::vector<ElementId> clique_edge_set(const Board& board, const std::vector<int>& vertices) {
    std::vector<ElementId> out;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            out.push_back(board.edge_id(vertices[i], vertices[j]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> cross_edge_set(const Board& board, const std::vector<int>& a,
                                      const std::vector<int>& b) {
    std::vector<ElementId> out;
    for (int u : a)
        for (int v : b) out.push_back(board.edge_id(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void for_each_subset(int n, int k, const std::vector<int>& pool,
                     const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            visit(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (size_t i = start; i + static_cast<size_t>(need) <= pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    (void)n;
    rec(0);
}

// Family group of all E(A,B) with |A|=a_size, |B|=b_size over disjoint subsets
// of [n]. Unordered when a_size == b_size (E(A,B) = E(B,A)).
FamilyGroup cross_family_group(const Board& board, const std::string& name, int a_size, int b_size,
                               std::size_t cap) {
    int n = board.n;
    if (a_size < 1 || b_size < 1 || a_size + b_size > n)
        throw std::invalid_argument("cross family '" + name + "': sizes infeasible for n=" +
                                    std::to_string(n));
    unsigned long long estimate = binomial(n, a_size) * binomial(n - a_size, b_size);
    if (a_size == b_size) estimate /= 2;
    if (estimate > cap)
        throw family_too_large("cross family '" + name + "' exceeds cap", estimate);

    FamilyGroup group;
    group.name = name;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    for_each_subset(n, a_size, all, [&](const std::vector<int>& a) {
        std::vector<int> rest;
        for (int v : all)
            if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
        for_each_subset(n, b_size, rest, [&](const std::vector<int>& b) {
            if (a_size == b_size && b < a) return; // unordered pair, emit once
            group.sets.push_back(cross_edge_set(board, a, b));
        });
    });
    return group;
}

FamilyGroup clique_family_group(const Board& board, const std::string& name, int a_size,
                                std::size_t cap) {
    int n = board.n;
    if (a_size < 2 || a_size > n)
        throw std::invalid_argument("clique family '" + name + "': |A| infeasible");
    unsigned long long estimate = binomial(n, a_size);
    if (estimate > cap) throw family_too_large("clique family '" + name + "' exceeds cap", estimate);
    FamilyGroup group;
    group.name = name;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    for_each_subset(n, a_size, all, [&](const std::vector<int>& a) {
        group.sets.push_back(clique_edge_set(board, a));
    });
    return group;
}

} // namespace

Family hamilton_families(int n, double eps, std::size_t cap) {
    if (n < 2) throw std::invalid_argument("hamilton_families: n < 2");
    if (!(eps > 0.0 && eps <= 2.0)) throw std::invalid_argument("hamilton_families: eps out of range");
    Board board = complete_graph_board(n);
    int s = std::max(1, static_cast<int>(std::llround(2.0 / eps)));
    Family fam;
    for (int j = 1; j <= s - 1; ++j) {
        int a_size = rounded_size(std::pow(n, (j - 1) * eps / 2.0));
        int b_size = rounded_size(n - 0.5 * std::pow(n, (j + 1) * eps / 2.0));
        fam.groups.push_back(
            cross_family_group(board, "F" + std::to_string(j), a_size, b_size, cap));
    }
    int last = rounded_size(n / std::log(static_cast<double>(n)));
    fam.groups.push_back(cross_family_group(board, "F" + std::to_string(s), last, last, cap));
    normalize_family(fam, board.elements);
    return fam;
}

Family coloring_family(int n, int k, std::size_t cap) {
    if (k < 2) throw std::invalid_argument("coloring_family: k must be >= 2");
    int a_size = (n + k - 1) / k; // ceil(n/k)
    if (a_size < 2) throw std::invalid_argument("coloring_family: ceil(n/k) < 2 is trivial");
    Board board = complete_graph_board(n);
    Family fam;
    fam.groups.push_back(clique_family_group(board, "COL", a_size, cap));
    normalize_family(fam, board.elements);
    return fam;
}

Family h_copies_family(int n, const SimpleGraph& h, std::size_t cap) {
    if (n < h.n) throw std::invalid_argument("h_copies_family: n smaller than v(H)");
    Board board = complete_graph_board(n);
    std::vector<GraphCopy> copies = enumerate_copies(h, complete_graph(n), h.n);
    if (copies.size() > cap) throw family_too_large("h_copies_family exceeds cap", copies.size());
    FamilyGroup group;
    group.name = "H";
    for (const auto& copy : copies) {
        std::vector<ElementId> set;
        for (auto [u, v] : copy.edges) set.push_back(board.edge_id(u, v));
        std::sort(set.begin(), set.end());
        group.sets.push_back(std::move(set));
    }
    Family fam;
    fam.groups.push_back(std::move(group));
    normalize_family(fam, board.elements);
    return fam;
}

Family pancyclicity_families(int n, double c, std::size_t cap) {
    if (n < 4) throw std::invalid_argument("pancyclicity_families: n too small");
    Board board = complete_graph_board(n);
    double root = std::sqrt(static_cast<double>(n));
    int sq = rounded_size(root);
    if (sq < 2) throw std::invalid_argument("pancyclicity_families: sqrt(n) rounds below 2");
    double b2 = n - c * root;
    if (b2 < 1.0)
        throw std::invalid_argument(
            "pancyclicity_families: n - c*sqrt(n) < 1; lower c for desk-scale boards");
    Family fam;
    fam.groups.push_back(clique_family_group(board, "F1", sq, cap));
    fam.groups.push_back(cross_family_group(board, "F2", 1, rounded_size(b2), cap));
    fam.groups.push_back(cross_family_group(board, "F3", sq, sq, cap));
    normalize_family(fam, board.elements);
    return fam;
}

} // namespace mbg

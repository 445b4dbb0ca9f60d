#include "mbg/graph.hpp"

#include "mbg/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace mbg {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int popcount(std::uint64_t x) { return std::popcount(x); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = gcd_ll(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> edge_list) : n(n_) {
    if (n < 0 || n > 63) throw std::invalid_argument("SimpleGraph: n out of range [0,63]");
    adj.assign(static_cast<size_t>(n), 0);
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("SimpleGraph: loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("SimpleGraph: vertex out of range");
        if (u > v) std::swap(u, v);
        if ((adj[static_cast<size_t>(u)] >> v) & 1) throw std::invalid_argument("SimpleGraph: multi-edge");
        adj[static_cast<size_t>(u)] |= 1ULL << v;
        adj[static_cast<size_t>(v)] |= 1ULL << u;
    }
    edges = std::move(edge_list);
    std::sort(edges.begin(), edges.end());
}

int SimpleGraph::degree(int v) const { return popcount(adj[static_cast<size_t>(v)]); }

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return SimpleGraph(n, std::move(e));
}

bool is_connected(const SimpleGraph& g) {
    if (g.n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1) next |= g.adj[static_cast<size_t>(v)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == (g.n == 64 ? ~0ULL : ((1ULL << g.n) - 1));
}

bool is_spanning_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return true;
    UnionFind uf(n);
    int comps = n;
    for (auto [u, v] : edges)
        if (uf.unite(u, v)) --comps;
    return comps == 1;
}

bool is_acyclic(const SimpleGraph& g) {
    UnionFind uf(g.n);
    for (auto [u, v] : g.edges)
        if (!uf.unite(u, v)) return false;
    return true;
}

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> color(static_cast<size_t>(g.n), -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < g.n; ++w)
                if (g.has_edge(v, w)) {
                    if (color[static_cast<size_t>(w)] == -1) {
                        color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                        q.push(w);
                    } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                        return false;
                    }
                }
        }
    }
    return true;
}

namespace {

bool ham_dfs(const SimpleGraph& g, int v, std::uint64_t visited, int count) {
    if (count == g.n) return g.has_edge(v, 0);
    std::uint64_t cand = g.adj[static_cast<size_t>(v)] & ~visited;
    while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (ham_dfs(g, w, visited | (1ULL << w), count + 1)) return true;
    }
    return false;
}

} // namespace

bool is_hamiltonian(const SimpleGraph& g) {
    if (g.n > 20) throw size_limit_error("is_hamiltonian: n > 20");
    if (g.n < 3) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 2) return false;
    if (!is_connected(g)) return false;
    return ham_dfs(g, 0, 1, 1);
}

namespace {

bool color_dfs(const SimpleGraph& g, const std::vector<int>& order, size_t idx, int k,
               std::vector<int>& color, int used) {
    if (idx == order.size()) return true;
    int v = order[idx];
    int limit = std::min(k, used + 1); // new colors introduced in order
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(v, w) && color[static_cast<size_t>(w)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[static_cast<size_t>(v)] = c;
        if (color_dfs(g, order, idx + 1, k, color, std::max(used, c + 1))) return true;
        color[static_cast<size_t>(v)] = -1;
    }
    return false;
}

} // namespace

bool chromatic_number_at_most(const SimpleGraph& g, int k) {
    if (g.n > 20) throw size_limit_error("chromatic_number_at_most: n > 20");
    if (k < 1) return g.n == 0;
    std::vector<int> order(static_cast<size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<size_t>(g.n), -1);
    return color_dfs(g, order, 0, k, color, 0);
}

namespace {

// Path from `start` back to `start` of exactly `len` edges; all intermediate
// vertices > start so each cycle is counted from its minimum vertex.
bool cycle_dfs(const SimpleGraph& g, int start, int v, std::uint64_t visited, int remaining) {
    if (remaining == 0) return v == start;
    // keep the start vertex as a candidate so the closing edge is visible
    std::uint64_t cand = g.adj[static_cast<size_t>(v)] & ~(visited & ~(1ULL << start));
    while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (w == start) {
            if (remaining == 1) return true;
            continue;
        }
        if (w < start) continue;
        if (remaining == 1) continue;
        if (cycle_dfs(g, start, w, visited | (1ULL << w), remaining - 1)) return true;
    }
    return false;
}

} // namespace

bool has_cycle_of_length(const SimpleGraph& g, int len) {
    if (len < 3 || len > g.n) return false;
    for (int s = 0; s + len <= g.n || s < g.n; ++s) {
        if (s >= g.n) break;
        if (cycle_dfs(g, s, s, 1ULL << s, len)) return true;
    }
    return false;
}

bool is_pancyclic(const SimpleGraph& g) {
    if (g.n > 14) throw size_limit_error("is_pancyclic: n > 14");
    if (g.n < 3) return false;
    for (int len = 3; len <= g.n; ++len)
        if (!has_cycle_of_length(g, len)) return false;
    return true;
}

namespace {

int mis_rec(const std::vector<std::uint64_t>& adj, std::uint64_t avail) {
    if (!avail) return 0;
    // branch on a max-degree vertex within avail
    int pick = -1, best_deg = -1;
    std::uint64_t rest = avail;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int d = popcount(adj[static_cast<size_t>(v)] & avail);
        if (d > best_deg) {
            best_deg = d;
            pick = v;
        }
    }
    if (best_deg <= 1) {
        // avail induces a matching plus isolated vertices; greedy is exact
        int count = 0;
        std::uint64_t left = avail;
        while (left) {
            int v = std::countr_zero(left);
            left &= ~(1ULL << v);
            left &= ~adj[static_cast<size_t>(v)];
            ++count;
        }
        return count;
    }
    int without = mis_rec(adj, avail & ~(1ULL << pick));
    int with = 1 + mis_rec(adj, avail & ~(1ULL << pick) & ~adj[static_cast<size_t>(pick)]);
    return std::max(with, without);
}

} // namespace

int independence_number(const SimpleGraph& g) {
    if (g.n > 20) throw size_limit_error("independence_number: n > 20");
    std::uint64_t all = g.n == 0 ? 0 : (1ULL << g.n) - 1;
    return mis_rec(g.adj, all);
}

namespace {

// Max vertex-disjoint s-t paths via unit-capacity max flow on the split graph
// (v_in -> v_out). Node 2v = in, 2v+1 = out.
int vertex_disjoint_paths(const SimpleGraph& g, int s, int t) {
    int N = 2 * g.n;
    std::vector<std::vector<int>> cap(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N), 0));
    for (int v = 0; v < g.n; ++v)
        cap[static_cast<size_t>(2 * v)][static_cast<size_t>(2 * v + 1)] = (v == s || v == t) ? g.n : 1;
    for (auto [u, v] : g.edges) {
        cap[static_cast<size_t>(2 * u + 1)][static_cast<size_t>(2 * v)] = g.n;
        cap[static_cast<size_t>(2 * v + 1)][static_cast<size_t>(2 * u)] = g.n;
    }
    int src = 2 * s, dst = 2 * t + 1;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(static_cast<size_t>(N), -1);
        prev[static_cast<size_t>(src)] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && prev[static_cast<size_t>(dst)] == -1) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < N; ++w)
                if (prev[static_cast<size_t>(w)] == -1 && cap[static_cast<size_t>(v)][static_cast<size_t>(w)] > 0) {
                    prev[static_cast<size_t>(w)] = v;
                    q.push(w);
                }
        }
        if (prev[static_cast<size_t>(dst)] == -1) break;
        for (int v = dst; v != src; v = prev[static_cast<size_t>(v)]) {
            int u = prev[static_cast<size_t>(v)];
            cap[static_cast<size_t>(u)][static_cast<size_t>(v)] -= 1;
            cap[static_cast<size_t>(v)][static_cast<size_t>(u)] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int vertex_connectivity(const SimpleGraph& g) {
    if (g.n > 14) throw size_limit_error("vertex_connectivity: n > 14");
    if (g.n <= 1) return 0;
    if (!is_connected(g)) return 0;
    bool complete = true;
    for (int v = 0; v < g.n && complete; ++v)
        if (g.degree(v) != g.n - 1) complete = false;
    if (complete) return g.n - 1;
    int best = g.n;
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, vertex_disjoint_paths(g, s, t));
    return best;
}

namespace {

struct IsoSearch {
    const SimpleGraph* pat;
    const SimpleGraph* host;
    std::vector<int> order;       // pattern vertices, connectivity-first
    std::vector<int> map;         // pattern -> host, -1 unmapped
    std::uint64_t used = 0;
    bool enumerate_all = false;
    std::set<std::vector<std::pair<int, int>>> copy_edge_sets;
    std::vector<GraphCopy> copies;
    bool found = false;
    std::vector<int> witness;

    bool feasible(int pv, int hv) const {
        if (host->degree(hv) < pat->degree(pv)) return false;
        for (int pw = 0; pw < pat->n; ++pw)
            if (map[static_cast<size_t>(pw)] != -1 && pat->has_edge(pv, pw) &&
                !host->has_edge(hv, map[static_cast<size_t>(pw)]))
                return false;
        return true;
    }

    void record() {
        if (!enumerate_all) {
            found = true;
            witness = map;
            return;
        }
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : pat->edges) {
            int a = map[static_cast<size_t>(u)], b = map[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            es.emplace_back(a, b);
        }
        std::sort(es.begin(), es.end());
        if (copy_edge_sets.insert(es).second) {
            GraphCopy c;
            c.edges = es;
            for (int pv = 0; pv < pat->n; ++pv) c.vertex_mask |= 1ULL << map[static_cast<size_t>(pv)];
            copies.push_back(std::move(c));
        }
    }

    void dfs(size_t idx) {
        if (found) return;
        if (idx == order.size()) {
            record();
            return;
        }
        int pv = order[idx];
        for (int hv = 0; hv < host->n; ++hv) {
            if ((used >> hv) & 1) continue;
            if (!feasible(pv, hv)) continue;
            map[static_cast<size_t>(pv)] = hv;
            used |= 1ULL << hv;
            dfs(idx + 1);
            used &= ~(1ULL << hv);
            map[static_cast<size_t>(pv)] = -1;
            if (found) return;
        }
    }
};

IsoSearch make_search(const SimpleGraph& pattern, const SimpleGraph& host, int max_pattern_vertices) {
    if (pattern.n > max_pattern_vertices)
        throw size_limit_error("subgraph isomorphism: pattern too large");
    IsoSearch s;
    s.pat = &pattern;
    s.host = &host;
    s.map.assign(static_cast<size_t>(pattern.n), -1);
    // order: highest degree first, then prefer vertices adjacent to the placed prefix
    std::vector<int> rem(static_cast<size_t>(pattern.n));
    std::iota(rem.begin(), rem.end(), 0);
    while (!rem.empty()) {
        int best = -1;
        int best_score = -1;
        for (int v : rem) {
            int attached = 0;
            for (int w : s.order)
                if (pattern.has_edge(v, w)) ++attached;
            int score = attached * 100 + pattern.degree(v);
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        s.order.push_back(best);
        rem.erase(std::find(rem.begin(), rem.end(), best));
    }
    return s;
}

} // namespace

std::optional<CopyWitness> contains_copy(const SimpleGraph& pattern, const SimpleGraph& host,
                                         int max_pattern_vertices) {
    if (pattern.n == 0) return CopyWitness{};
    IsoSearch s = make_search(pattern, host, max_pattern_vertices);
    s.dfs(0);
    if (!s.found) return std::nullopt;
    return CopyWitness{s.witness};
}

std::vector<GraphCopy> enumerate_copies(const SimpleGraph& pattern, const SimpleGraph& host,
                                        int max_pattern_vertices) {
    IsoSearch s = make_search(pattern, host, max_pattern_vertices);
    s.enumerate_all = true;
    s.dfs(0);
    return std::move(s.copies);
}

namespace {

int induced_edge_count(const SimpleGraph& g, std::uint64_t mask) {
    int e = 0;
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        e += popcount(g.adj[static_cast<size_t>(v)] & rest);
    }
    return e;
}

} // namespace

Rational max_density(const SimpleGraph& g) {
    if (g.n > 12) throw size_limit_error("max_density: n > 12");
    if (g.n < 1) throw std::invalid_argument("max_density: empty graph");
    Rational best(0, 1);
    for (std::uint64_t mask = 1; mask < (1ULL << g.n); ++mask) {
        int v = popcount(mask);
        int e = induced_edge_count(g, mask);
        Rational d(e, v);
        if (best < d) best = d;
    }
    return best;
}

Rational max_2_density(const SimpleGraph& g) {
    if (g.n > 12) throw size_limit_error("max_2_density: n > 12");
    if (g.n < 3) throw std::invalid_argument("max_2_density: needs a subgraph on >= 3 vertices");
    bool any = false;
    Rational best(0, 1);
    for (std::uint64_t mask = 1; mask < (1ULL << g.n); ++mask) {
        int v = popcount(mask);
        if (v < 3) continue;
        int e = induced_edge_count(g, mask);
        Rational d(e - 1, v - 2);
        if (!any || best < d) {
            best = d;
            any = true;
        }
    }
    return best;
}

CollectionReport k_collections(const SimpleGraph& g, const SimpleGraph& k_graph) {
    auto copies = enumerate_copies(k_graph, g);
    int m = static_cast<int>(copies.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (popcount(copies[static_cast<size_t>(i)].vertex_mask &
                         copies[static_cast<size_t>(j)].vertex_mask) >= 2)
                uf.unite(i, j);
    CollectionReport report;
    std::vector<int> comp_index(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (comp_index[static_cast<size_t>(r)] == -1) {
            comp_index[static_cast<size_t>(r)] = static_cast<int>(report.collections.size());
            report.collections.emplace_back();
        }
        auto& col = report.collections[static_cast<size_t>(comp_index[static_cast<size_t>(r)])];
        col.vertex_mask |= copies[static_cast<size_t>(i)].vertex_mask;
        col.copies.push_back(copies[static_cast<size_t>(i)]);
    }
    for (auto& col : report.collections) col.vertex_count = popcount(col.vertex_mask);
    return report;
}

bool is_valid_bunch(const std::vector<GraphCopy>& copies) {
    if (copies.empty()) return false;
    std::uint64_t covered = copies.front().vertex_mask;
    for (size_t i = 1; i < copies.size(); ++i) {
        std::uint64_t vm = copies[i].vertex_mask;
        if ((vm & ~covered) == 0) return false;          // needs >= 1 new vertex
        if (popcount(vm & covered) < 2) return false;    // needs >= 2 shared vertices
        covered |= vm;
    }
    return true;
}

BunchCertificate extract_bunch(const KCollection& collection, const SimpleGraph& k_graph, int t) {
    int target = t * k_graph.n;
    if (collection.vertex_count < target)
        throw std::invalid_argument("extract_bunch: collection has fewer than t*v(K) vertices");
    BunchCertificate bunch;
    bunch.copies.push_back(collection.copies.front());
    bunch.vertex_mask = collection.copies.front().vertex_mask;
    while (popcount(bunch.vertex_mask) < target) {
        bool extended = false;
        for (const auto& c : collection.copies) {
            if ((c.vertex_mask & ~bunch.vertex_mask) != 0 &&
                popcount(c.vertex_mask & bunch.vertex_mask) >= 2) {
                bunch.copies.push_back(c);
                bunch.vertex_mask |= c.vertex_mask;
                extended = true;
                break;
            }
        }
        if (!extended)
            throw invariant_violation("extract_bunch: chain cannot be extended; collection malformed");
    }
    bunch.vertex_count = popcount(bunch.vertex_mask);
    std::set<std::pair<int, int>> es;
    for (const auto& c : bunch.copies) es.insert(c.edges.begin(), c.edges.end());
    bunch.edges.assign(es.begin(), es.end());
    return bunch;
}

Rational bunch_density(const BunchCertificate& bunch) {
    return Rational(static_cast<long long>(bunch.edges.size()), bunch.vertex_count);
}

namespace {

std::uint64_t neighborhood(const SimpleGraph& g, std::uint64_t set) {
    std::uint64_t nb = 0;
    std::uint64_t rest = set;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        nb |= g.adj[static_cast<size_t>(v)];
    }
    return nb & ~set;
}

void subsets_of_size(int n, int k, std::uint64_t allowed, std::uint64_t cur, int start,
                     const std::function<bool(std::uint64_t)>& visit, bool& stop) {
    if (stop) return;
    if (k == 0) {
        if (!visit(cur)) stop = true;
        return;
    }
    for (int v = start; v < n; ++v) {
        if (!((allowed >> v) & 1)) continue;
        subsets_of_size(n, k - 1, allowed, cur | (1ULL << v), v + 1, visit, stop);
        if (stop) return;
    }
}

std::string mask_to_str(std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

} // namespace

ConditionResult check_hamilton_conditions(const SimpleGraph& g, double exp_factor, int cut_size) {
    if (g.n > 14) throw size_limit_error("check_hamilton_conditions: n > 14");
    ConditionResult res;
    res.p1 = true;
    for (std::uint64_t s = 1; s < (1ULL << g.n); ++s) {
        int sz = popcount(s);
        if (sz > cut_size) continue;
        int nb = popcount(neighborhood(g, s));
        if (static_cast<double>(nb) < exp_factor * sz - 1e-12) {
            res.p1 = false;
            res.witness = "P1 fails for S=" + mask_to_str(s) + " with |N(S)|=" + std::to_string(nb);
            break;
        }
    }
    res.p2 = true;
    if (cut_size >= 1 && 2 * cut_size <= g.n) {
        std::uint64_t all = (1ULL << g.n) - 1;
        bool stop = false;
        subsets_of_size(g.n, cut_size, all, 0, 0,
                        [&](std::uint64_t a) {
                            bool inner_stop = false;
                            bool ok = true;
                            subsets_of_size(g.n, cut_size, all & ~a, 0, 0,
                                            [&](std::uint64_t b) {
                                                if ((neighborhood(g, a) & b) == 0) {
                                                    ok = false;
                                                    res.witness = "P2 fails for A=" + mask_to_str(a) +
                                                                  " B=" + mask_to_str(b);
                                                    return false;
                                                }
                                                return true;
                                            },
                                            inner_stop);
                            if (!ok) {
                                res.p2 = false;
                                return false;
                            }
                            return true;
                        },
                        stop);
    }
    return res;
}

ConditionResult check_pancyclicity_conditions(const SimpleGraph& g, double c) {
    if (g.n > 14) throw size_limit_error("check_pancyclicity_conditions: n > 14");
    ConditionResult res;
    int alpha = independence_number(g);
    double root = std::sqrt(static_cast<double>(g.n));
    res.p1 = static_cast<double>(alpha) <= root + 1e-12;
    if (!res.p1) res.witness = "independence number " + std::to_string(alpha) + " exceeds sqrt(n)";
    int kappa = vertex_connectivity(g);
    res.p2 = static_cast<double>(kappa) + 1e-12 >= c * root;
    if (!res.p2 && res.witness.empty())
        res.witness = "vertex connectivity " + std::to_string(kappa) + " below c*sqrt(n)";
    return res;
}

} // namespace mbg

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mbg {

// Exact rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Simple undirected graph on vertices 0..n-1, no loops or multi-edges.
// Adjacency is kept as per-vertex bitmasks; analysis routines guard their own
// size limits and throw size_limit_error beyond them.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // canonical: u < v, sorted
    std::vector<std::uint64_t> adj;         // bitmask rows

    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const { return u != v && (adj[static_cast<size_t>(u)] >> v) & 1; }
    int degree(int v) const;
};

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

// --- predicates -----------------------------------------------------------

bool is_connected(const SimpleGraph& g);          // n >= 1; empty graph counts as connected iff n <= 1
bool is_spanning_connected(int n, const std::vector<std::pair<int, int>>& edges);
bool is_acyclic(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_hamiltonian(const SimpleGraph& g);        // exact, n <= 20
bool chromatic_number_at_most(const SimpleGraph& g, int k); // exact, n <= 20
bool is_pancyclic(const SimpleGraph& g);          // exact, n <= 14
bool has_cycle_of_length(const SimpleGraph& g, int len);

int independence_number(const SimpleGraph& g);    // exact, n <= 20
int vertex_connectivity(const SimpleGraph& g);    // exact, n <= 14

// --- subgraph containment -------------------------------------------------

struct CopyWitness {
    std::vector<int> vertex_map; // host vertex per pattern vertex
};

// Subgraph (not induced) isomorphism with degree pruning; v(pattern) <= 8 by
// default limit. Returns the first witness found.
std::optional<CopyWitness> contains_copy(const SimpleGraph& pattern, const SimpleGraph& host,
                                         int max_pattern_vertices = 8);

// A copy of `pattern` inside `host` as vertex set + edge set (dedup by edge set).
struct GraphCopy {
    std::uint64_t vertex_mask = 0;
    std::vector<std::pair<int, int>> edges; // canonical
};

std::vector<GraphCopy> enumerate_copies(const SimpleGraph& pattern, const SimpleGraph& host,
                                        int max_pattern_vertices = 8);

// --- densities ------------------------------------------------------------

Rational max_density(const SimpleGraph& g);    // m(G),  v <= 12
Rational max_2_density(const SimpleGraph& g);  // m2(G), v <= 12, requires a subgraph with >= 3 vertices

// --- K-collections and bunches -------------------------------------------

struct KCollection {
    std::uint64_t vertex_mask = 0;
    int vertex_count = 0;
    std::vector<GraphCopy> copies;
};

struct CollectionReport {
    std::vector<KCollection> collections;
};

CollectionReport k_collections(const SimpleGraph& g, const SimpleGraph& k_graph);

struct BunchCertificate {
    std::vector<GraphCopy> copies; // ordered chain
    std::uint64_t vertex_mask = 0;
    std::vector<std::pair<int, int>> edges; // union, canonical
    int vertex_count = 0;
};

// Greedy chain construction: each appended copy shares >= 2 old vertices and
// brings >= 1 new one, until v(B) >= t*v(K). Throws invalid_argument when the
// collection is too small.
BunchCertificate extract_bunch(const KCollection& collection, const SimpleGraph& k_graph, int t);

bool is_valid_bunch(const std::vector<GraphCopy>& copies);
Rational bunch_density(const BunchCertificate& bunch); // e(B)/v(B)

// --- sufficient-condition verifiers --------------------------------------

struct ConditionResult {
    bool p1 = false;
    bool p2 = false;
    std::string witness; // counterexample description when a condition fails
};

// P1: every S with |S| <= cut_size expands: |N(S)| >= exp_factor*|S|.
// P2: an edge between any two disjoint sets of size exactly cut_size.
ConditionResult check_hamilton_conditions(const SimpleGraph& g, double exp_factor, int cut_size);

// P1: independence number <= sqrt(n). P2: c*sqrt(n)-vertex-connected.
ConditionResult check_pancyclicity_conditions(const SimpleGraph& g, double c);

} // namespace mbg

// graph.hpp -- undirected simple graphs: data model, parsers, generators.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wl {

// Raised for malformed input text (edge-list / DIMACS parsing).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph. Adjacency lists are strictly ascending,
// symmetric, self-loop free; all ids in [0, n).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    std::int64_t edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;  // binary search on adj[u]

    // Throws std::logic_error if any structural invariant is violated.
    void check_invariants() const;

    bool operator==(const Graph&) const = default;

    // Builds a graph from distinct undirected edges. Validates ids,
    // rejects self-loops and duplicates (after orienting low-to-high).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

struct Permutation {
    std::vector<int> map;  // image of each vertex id; a bijection on [0, n)

    int size() const { return static_cast<int>(map.size()); }
    static Permutation identity(int n);
    Permutation inverse() const;
    void check_bijection() const;  // throws std::invalid_argument
};

// Edge-list format: '#' starts a comment, blank lines are skipped,
// first data line is "<n> <m>", then exactly m lines "<u> <v>" (0-based).
Graph parse_edge_list(std::string_view text);

// DIMACS-like: "c ..." comments, one "p edge <n> <m>" line, then m lines
// "e <u> <v>" with 1-based ids.
Graph parse_dimacs(std::string_view text);

// Serializes in edge-list form; parse_edge_list(to_edge_list(g)) == g.
std::string to_edge_list(const Graph& g);

// h's vertices are appended after g's (offset by g.n); no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// Relabels: edge (u,v) in g becomes (p(u), p(v)) in the result.
Graph permute(const Graph& g, const Permutation& p);

// xorshift64* generator (Vigna 2014): state updated by three shift-xors,
// output multiplied by 2685821657736338717. The seed is pre-mixed with one
// splitmix64 step so that small seeds give unrelated streams. Fixed
// algorithm, bit-reproducible everywhere.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed);
    std::uint64_t next_u64();
    double next_unit();                       // uniform in [0, 1), 53 bits
    std::uint64_t next_below(std::uint64_t bound);  // uniform in [0, bound)

private:
    std::uint64_t state_;
};

// Fisher-Yates shuffle of the identity, driven by XorShift64Star(seed).
Permutation random_permutation(int n, std::uint64_t seed);

// Deterministic generator families.
Graph cycle_graph(int n);                                  // n >= 3
Graph disjoint_cycles(const std::vector<int>& lengths);    // each >= 3
Graph rook_4x4();        // vertices Z4 x Z4, same row or same column
Graph shrikhande_graph();// Cayley graph of Z4 x Z4, set {±(1,0),±(0,1),±(1,1)}
Graph gnp_graph(int n, double p, std::uint64_t seed);      // 0 <= p <= 1

// Dispatch by family name: "cycle" (n), "disjoint_cycles" (lengths),
// "rook4x4", "shrikhande", "gnp" (n, p, seed). Unknown family or invalid
// params throw std::invalid_argument.
struct GenParams {
    int n = 0;
    std::vector<int> lengths;
    double p = 0.0;
    std::uint64_t seed = 0;
};
Graph generate(std::string_view family, const GenParams& params);

}  // namespace wl

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oddspec {

// Simple undirected graph: symmetric adjacency, no self-loops, vertices
// are 0-indexed ints. Instances are treated as immutable once built;
// all free functions below are pure.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    // Sorted only when edges were added in sorted order; iteration order is
    // deterministic for a fixed construction sequence either way.
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int u) const;

    int n_;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> bits_;  // n*n adjacency bitmap
};

// Length of the shortest odd cycle; Infinite exactly for bipartite graphs.
// Arithmetic on the infinite value is a logic error, hence no implicit int.
class OddGirth {
public:
    static OddGirth infinite() { return OddGirth(0); }
    static OddGirth finite(int k);

    bool is_infinite() const { return value_ == 0; }
    int value() const;  // throws invalid_parameter when infinite

    bool operator==(const OddGirth& o) const { return value_ == o.value_; }
    // Infinite compares greater than every finite girth.
    bool at_least(int k) const { return is_infinite() || value_ >= k; }

private:
    explicit OddGirth(int v) : value_(v) {}
    int value_;  // 0 encodes Infinite, kept private
};

// --- generators ---

Graph generate_cycle(int k);     // C_k, k >= 3
Graph generate_complete(int n);  // K_n, n >= 1

// Cayley graph of F_2^m: vertices are all 2^m bit vectors, x ~ y iff
// x XOR y is a generator. Generators must be nonzero (loops) and < 2^m.
Graph generate_cayley_f2(int m, const std::vector<std::uint32_t>& generators);

Graph generate_hypercube(int d);    // Q_d = Cayley(F_2^d, unit vectors)
Graph generate_folded_cube(int d);  // Cayley(F_2^(d-1), units + all-ones), d >= 2

// --- combinatorial queries ---

// Per-vertex BFS; an edge {x,y} with dist(u,x) == dist(u,y) closes an odd
// walk of length 2*dist+1, and the minimum such walk is the odd girth.
OddGirth odd_girth(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<int>& s);

bool is_bipartite(const Graph& g);

// Exact bipartite edge-deletion distance D_2(g) = |E| - maxcut, by Gray-code
// enumeration of all 2-colorings. Guarded at n <= 24.
int d2_oracle(const Graph& g);

}  // namespace oddspec

#include "oddspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "oddspec/errors.hpp"

namespace oddspec {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw invalid_parameter("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_)
        throw invalid_parameter("vertex " + std::to_string(u) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return bits_[static_cast<std::size_t>(u) * n_ + v];
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_parameter("self-loops are not allowed");
    if (bits_[static_cast<std::size_t>(u) * n_ + v]) return;
    bits_[static_cast<std::size_t>(u) * n_ + v] = true;
    bits_[static_cast<std::size_t>(v) * n_ + u] = true;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (bits_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

OddGirth OddGirth::finite(int k) {
    if (k < 3 || k % 2 == 0)
        throw invalid_parameter("finite odd girth must be an odd integer >= 3");
    return OddGirth(k);
}

int OddGirth::value() const {
    if (is_infinite()) throw invalid_parameter("odd girth is infinite (bipartite graph)");
    return value_;
}

Graph generate_cycle(int k) {
    if (k < 3) throw invalid_parameter("cycle length must be >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph generate_complete(int n) {
    if (n < 1) throw invalid_parameter("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph generate_cayley_f2(int m, const std::vector<std::uint32_t>& generators) {
    if (m < 1) throw invalid_parameter("dimension m must be >= 1");
    if (m > 14) throw capacity_exceeded("refusing to build Cayley graph with 2^" +
                                        std::to_string(m) + " vertices");
    if (generators.empty()) throw invalid_parameter("generator set must be nonempty");
    const std::uint32_t limit = 1u << m;
    for (std::uint32_t s : generators) {
        if (s == 0) throw invalid_parameter("zero generator would create self-loops");
        if (s >= limit)
            throw invalid_parameter("generator " + std::to_string(s) +
                                    " is not in F_2^" + std::to_string(m));
    }
    const int n = static_cast<int>(limit);
    Graph g(n);
    for (std::uint32_t x = 0; x < limit; ++x)
        for (std::uint32_t s : generators) {
            const std::uint32_t y = x ^ s;
            if (x < y) g.add_edge(static_cast<int>(x), static_cast<int>(y));
        }
    return g;
}

Graph generate_hypercube(int d) {
    if (d < 1) throw invalid_parameter("hypercube dimension must be >= 1");
    std::vector<std::uint32_t> gens;
    for (int i = 0; i < d; ++i) gens.push_back(1u << i);
    return generate_cayley_f2(d, gens);
}

Graph generate_folded_cube(int d) {
    if (d < 2) throw invalid_parameter("folded cube dimension must be >= 2");
    const int m = d - 1;
    std::vector<std::uint32_t> gens;
    for (int i = 0; i < m; ++i) gens.push_back(1u << i);
    const std::uint32_t ones = (1u << m) - 1;
    if (std::find(gens.begin(), gens.end(), ones) == gens.end()) gens.push_back(ones);
    return generate_cayley_f2(m, gens);
}

namespace {

// BFS distances from root; unreachable stays -1.
std::vector<int> bfs_distances(const Graph& g, int root) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

OddGirth odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    const auto edge_list = g.edges();
    for (int u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        for (const auto& [x, y] : edge_list) {
            if (dist[x] >= 0 && dist[x] == dist[y])
                best = std::min(best, 2 * dist[x] + 1);
        }
        if (best == 3) break;  // cannot improve
    }
    if (best == std::numeric_limits<int>::max()) return OddGirth::infinite();
    return OddGirth::finite(best);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> components;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        std::deque<int> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    for (int u : s)
        if (u < 0 || u >= g.vertex_count())
            throw invalid_parameter("vertex " + std::to_string(u) + " not in graph");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int d2_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24)
        throw capacity_exceeded("d2_oracle is exhaustive and limited to n <= 24, got n = " +
                                std::to_string(n));
    if (n <= 1 || g.edge_count() == 0) return 0;

    // Gray-code walk over all 2-colorings of vertices 1..n-1 (vertex 0 fixed),
    // updating the cut value by the flipped vertex's local edge balance.
    std::vector<int> side(n, 0);
    int cut = 0;
    int best = 0;
    const std::uint32_t total = 1u << (n - 1);
    for (std::uint32_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i) + 1;
        int delta = 0;
        for (int w : g.neighbors(v)) delta += (side[w] == side[v]) ? 1 : -1;
        side[v] ^= 1;
        cut += delta;
        best = std::max(best, cut);
    }
    return g.edge_count() - best;
}

}  // namespace oddspec

#pragma once

#include <array>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "oddspec/graph.hpp"

namespace testutil {

inline oddspec::Graph random_graph(std::mt19937& rng, int n, double p) {
    oddspec::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// random spanning tree first, so the result is connected by construction
inline oddspec::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    oddspec::Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) && !g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

// Independent odd-girth oracle via the bipartite double cover: the shortest
// odd closed walk through s is dist((s,0) -> (s,1)), and the minimum over s
// is the odd girth. Returns 0 for bipartite graphs.
inline int odd_girth_oracle(const oddspec::Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s) {
        std::vector<std::array<int, 2>> dist(static_cast<std::size_t>(n), {-1, -1});
        std::queue<std::pair<int, int>> q;
        dist[static_cast<std::size_t>(s)][0] = 0;
        q.push({s, 0});
        while (!q.empty()) {
            const auto [u, parity] = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                const int np = 1 - parity;
                auto& d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(np)];
                if (d < 0) {
                    d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(parity)] + 1;
                    q.push({v, np});
                }
            }
        }
        const int odd = dist[static_cast<std::size_t>(s)][1];
        if (odd > 0) best = std::min(best, odd);
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

// plain-enumeration max-cut, independent of the Gray-code walk in d2_oracle
inline int d2_brute(const oddspec::Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int cut = 0;
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1u) != ((mask >> v) & 1u)) ++cut;
        best = std::max(best, cut);
    }
    return g.edge_count() - best;
}

}  // namespace testutil

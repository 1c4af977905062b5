#pragma once

#include <random>
#include <vector>

#include "grest/graph.hpp"

namespace testutil {

inline grest::Graph complete(int n) {
    grest::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline grest::Graph path(int n) {
    grest::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline grest::Graph cycle(int n) {
    grest::Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline grest::Graph star(int leaves) {
    grest::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline grest::Graph grid(int rows, int cols) {
    grest::Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

// Erdős–Rényi G(n, p), deterministic in the seed.
inline grest::Graph random_graph(int n, double p, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    grest::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Random graph with exactly m edges.
inline grest::Graph random_graph_m(int n, int m, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<grest::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    grest::Graph g(n);
    for (int i = 0; i < m && i < static_cast<int>(all.size()); ++i)
        g.add_edge(all[i].first, all[i].second);
    return g;
}

}  // namespace testutil

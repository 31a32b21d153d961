#pragma once

// Shared helpers for the test binaries: seeded random graphs and a few
// standard constructions used across files.

#include <random>
#include <vector>

#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"

namespace mctest {

inline minorclique::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<minorclique::Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) edges.push_back({u, v});
    return minorclique::Graph(n, edges);
}

inline minorclique::Graph path(int n) {
    std::vector<minorclique::Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return minorclique::Graph(n, edges);
}

inline minorclique::Graph cycle(int n) {
    std::vector<minorclique::Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    if (n > 2) edges.push_back({0, n - 1});
    return minorclique::Graph(n, edges);
}

inline minorclique::Graph star(int leaves) {
    std::vector<minorclique::Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return minorclique::Graph(leaves + 1, edges);
}

// Random permutation relabel, for invariance checks.
inline minorclique::Graph relabel(std::mt19937& rng, const minorclique::Graph& g,
                                  std::vector<int>* perm_out = nullptr) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<minorclique::Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = perm[u], b = perm[v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    if (perm_out) *perm_out = perm;
    return minorclique::Graph(n, edges);
}

}  // namespace mctest

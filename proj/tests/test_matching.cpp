#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/matching.hpp"
#include "minorclique/minor.hpp"
#include "util.hpp"

using minorclique::Graph;
using minorclique::Matching;

namespace {

// Bitmask DP oracle: size of a maximum matching, independent of the Edmonds path.
int dp_matching(const Graph& g) {
    int n = g.vertex_count();
    REQUIRE(n <= 16);
    std::vector<int> memo(1u << n, -1);
    memo[0] = 0;
    auto rec = [&](auto&& self, unsigned mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int v = std::countr_zero(mask);
        int best = self(self, mask & (mask - 1));  // leave v unmatched
        for (int u = v + 1; u < n; ++u)
            if ((mask & (1u << u)) && g.adjacent(v, u))
                best = std::max(best, 1 + self(self, mask & ~(1u << v) & ~(1u << u)));
        return memo[mask] = best;
    };
    return rec(rec, (1u << n) - 1);
}

}  // namespace

TEST_CASE("maximum matching known values") {
    CHECK(minorclique::maximum_matching(Graph(0)).size() == 0);
    CHECK(minorclique::maximum_matching(Graph(5)).size() == 0);
    CHECK(minorclique::maximum_matching(mctest::cycle(5)).size() == 2);
    CHECK(minorclique::maximum_matching(mctest::cycle(6)).size() == 3);
    CHECK(minorclique::maximum_matching(mctest::path(4)).size() == 2);
    CHECK(minorclique::maximum_matching(minorclique::complete_graph(7)).size() == 3);
    CHECK(minorclique::maximum_matching(mctest::star(5)).size() == 1);
    // Petersen graph has a perfect matching.
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(minorclique::maximum_matching(petersen).size() == 5);
}

TEST_CASE("matching edges are a valid matching") {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = mctest::random_graph(rng, 10);
        Matching m = minorclique::maximum_matching(g);
        std::vector<bool> used(10, false);
        for (auto [u, v] : m.edges) {
            CHECK(u < v);
            CHECK(g.adjacent(u, v));
            CHECK_FALSE(used[u]);
            CHECK_FALSE(used[v]);
            used[u] = used[v] = true;
        }
    }
}

TEST_CASE("matching size matches DP oracle, exhaustive small n") {
    for (int n = 0; n <= 6; ++n)
        minorclique::for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(minorclique::maximum_matching(g).size() == static_cast<size_t>(dp_matching(g)));
        });
}

TEST_CASE("matching size matches DP oracle, random mid-size") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> nd(8, 14);
    std::uniform_real_distribution<double> pd(0.1, 0.8);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = mctest::random_graph(rng, nd(rng), pd(rng));
        CHECK(minorclique::maximum_matching(g).size() == static_cast<size_t>(dp_matching(g)));
    }
}

TEST_CASE("missing matching size recovers shape parameters") {
    // K(a,b) is a complete graph minus a perfect matching on the first 2a vertices,
    // so its complement has maximum matching exactly a.
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 4; ++b)
            CHECK(minorclique::missing_matching_size(
                      minorclique::complement_of_matching({a, b})) == a);
    CHECK(minorclique::missing_matching_size(minorclique::complete_graph(6)) == 0);
    // Complement of C6 contains a perfect matching.
    CHECK(minorclique::missing_matching_size(mctest::cycle(6)) == 3);
}

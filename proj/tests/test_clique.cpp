#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "minorclique/clique.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/minor.hpp"
#include "minorclique/numeric.hpp"
#include "util.hpp"

using minorclique::BigInt;
using minorclique::CliqueCensus;
using minorclique::Graph;
using minorclique::Rational;

namespace {

// Independent subset-scan oracle: total, per-vertex counts, and omega.
struct NaiveCensus {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_vertex;
    int omega = 0;
};

NaiveCensus naive_census(const Graph& g) {
    int n = g.vertex_count();
    REQUIRE(n <= 20);
    NaiveCensus out;
    out.per_vertex.assign(n, 0);
    for (std::uint64_t s = 0;; ++s) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if (s & minorclique::bit(v))
                clique = (g.row(v) & s) == (s ^ minorclique::bit(v));
        if (clique) {
            ++out.total;
            int size = std::popcount(s);
            out.omega = std::max(out.omega, size);
            for (int v = 0; v < n; ++v)
                if (s & minorclique::bit(v)) ++out.per_vertex[v];
        }
        if (s == (n == 64 ? ~0ull : (1ull << n) - 1)) break;
    }
    return out;
}

void check_against_naive(const Graph& g) {
    NaiveCensus expect = naive_census(g);
    CliqueCensus got = minorclique::clique_census(g);
    REQUIRE(got.total == BigInt(expect.total));
    REQUIRE(got.omega == expect.omega);
    for (int v = 0; v < g.vertex_count(); ++v)
        REQUIRE(got.fractions[v] == Rational(expect.per_vertex[v], expect.total));
}

}  // namespace

TEST_CASE("census closed forms") {
    for (int n = 0; n <= 6; ++n) {
        CliqueCensus c = minorclique::clique_census(minorclique::complete_graph(n));
        CHECK(c.total == minorclique::pow2(n));
        CHECK(c.omega == n);
        // Empty graph: the empty clique plus n singletons.
        CHECK(minorclique::clique_count(Graph(n)) == BigInt(n + 1));
    }
    CHECK(minorclique::clique_count(mctest::cycle(4)) == 9);
    CHECK(minorclique::clique_count(mctest::cycle(5)) == 11);
    CHECK(minorclique::clique_count(mctest::path(4)) == 8);
}

TEST_CASE("census of matching complements") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 4; ++b) {
            Graph g = minorclique::complement_of_matching({a, b});
            CHECK(minorclique::clique_count(g) == minorclique::shape_count_value(a, b));
        }
}

TEST_CASE("census matches subset-scan oracle, exhaustive small n") {
    for (int n = 0; n <= 5; ++n)
        minorclique::for_each_labeled_graph(n, [&](const Graph& g) { check_against_naive(g); });
}

TEST_CASE("census matches subset-scan oracle, random mid-size") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> nd(7, 14);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = mctest::random_graph(rng, nd(rng), pd(rng));
        check_against_naive(g);
    }
}

TEST_CASE("every vertex sits in at most half the cliques") {
    // Dropping v from a clique that contains it is injective into the rest.
    std::mt19937 rng(32);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = mctest::random_graph(rng, 12, 0.6);
        CliqueCensus c = minorclique::clique_census(g);
        for (const Rational& f : c.fractions) CHECK(f <= Rational(1, 2));
    }
}

TEST_CASE("census is relabeling invariant") {
    std::mt19937 rng(33);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = mctest::random_graph(rng, 10);
        std::vector<int> perm;
        Graph h = mctest::relabel(rng, g, &perm);
        CliqueCensus cg = minorclique::clique_census(g);
        CliqueCensus ch = minorclique::clique_census(h);
        CHECK(cg.total == ch.total);
        CHECK(cg.omega == ch.omega);
        for (int v = 0; v < 10; ++v) CHECK(cg.fractions[v] == ch.fractions[perm[v]]);
    }
}

TEST_CASE("census is additive over disjoint union") {
    std::mt19937 rng(34);
    for (int rep = 0; rep < 50; ++rep) {
        Graph a = mctest::random_graph(rng, 7);
        Graph b = mctest::random_graph(rng, 6);
        std::vector<Graph> parts{a, b};
        Graph u = Graph::disjoint_union(parts);
        // Both empty cliques collapse into one.
        CHECK(minorclique::clique_count(u) ==
              minorclique::clique_count(a) + minorclique::clique_count(b) - 1);
    }
}

TEST_CASE("maximum clique witness") {
    std::mt19937 rng(35);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = mctest::random_graph(rng, 11);
        std::uint64_t mask = minorclique::maximum_clique(g);
        int omega = std::popcount(mask);
        for (int v = 0; v < 11; ++v)
            for (int u = 0; u < v; ++u)
                if ((mask & minorclique::bit(u)) && (mask & minorclique::bit(v)))
                    CHECK(g.adjacent(u, v));
        CHECK(omega == naive_census(g).omega);
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(minorclique::count_cliques_naive(Graph(21)), std::domain_error);
    CHECK_NOTHROW(minorclique::clique_count(Graph(64)));
}

TEST_CASE("peeling trace: complete graph is all selections") {
    Graph k4 = minorclique::complete_graph(4);
    std::vector<int> target{0, 1, 2, 3};
    auto trace = minorclique::peeling_trace(k4, target).steps;
    REQUIRE(trace.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(trace[i].vertex == i);
        CHECK(trace[i].size_before == 4 - i);
        CHECK(trace[i].reason == minorclique::PeelReason::Selected);
    }
}

TEST_CASE("peeling trace: cycle with an edge target") {
    Graph c5 = mctest::cycle(5);
    std::vector<int> target{0, 1};
    auto trace = minorclique::peeling_trace(c5, target).steps;
    using R = minorclique::PeelReason;
    REQUIRE(trace.size() == 5);
    // No outside vertex has degree strictly below the clique's minimum, so 0 is
    // selected first and its non-neighbors 2,3 fall; then 1 is selected and 4 falls.
    CHECK(trace[0].vertex == 0);
    CHECK(trace[0].reason == R::Selected);
    CHECK(trace[1].vertex == 2);
    CHECK(trace[1].reason == R::NonNeighborDelete);
    CHECK(trace[2].vertex == 3);
    CHECK(trace[2].reason == R::NonNeighborDelete);
    CHECK(trace[3].vertex == 1);
    CHECK(trace[3].reason == R::Selected);
    CHECK(trace[4].vertex == 4);
    CHECK(trace[4].reason == R::NonNeighborDelete);
    for (int i = 0; i < 5; ++i) CHECK(trace[i].size_before == 5 - i);
}

TEST_CASE("peeling trace: empty target peels by minimum degree") {
    Graph p3 = mctest::path(3);
    auto trace = minorclique::peeling_trace(p3, {}).steps;
    REQUIRE(trace.size() == 3);
    for (const auto& step : trace) CHECK(step.reason == minorclique::PeelReason::MinDegreeDelete);
    CHECK(trace[0].vertex == 0);  // lowest index among the two degree-1 endpoints
    CHECK(trace[1].vertex == 1);
    CHECK(trace[2].vertex == 2);
}

TEST_CASE("peeling trace: outside vertex of strictly smaller degree goes first") {
    // Triangle 0,1,2 plus pendant 3 attached to 0: deg(3)=1 below the clique min 2.
    Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    std::vector<int> target{0, 1, 2};
    auto trace = minorclique::peeling_trace(g, target).steps;
    using R = minorclique::PeelReason;
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].vertex == 3);
    CHECK(trace[0].reason == R::MinDegreeDelete);
    CHECK(trace[1].vertex == 0);
    CHECK(trace[1].reason == R::Selected);
}

TEST_CASE("peeling trace invariants on random inputs") {
    std::mt19937 rng(36);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 3 + rep % 8;
        Graph g = mctest::random_graph(rng, n);
        std::uint64_t mask = minorclique::maximum_clique(g);
        std::vector<int> target;
        for (int v = 0; v < n; ++v)
            if (mask & minorclique::bit(v)) target.push_back(v);
        auto trace = minorclique::peeling_trace(g, target).steps;
        REQUIRE(static_cast<int>(trace.size()) == n);
        std::vector<int> selected;
        for (int i = 0; i < n; ++i) {
            CHECK(trace[i].size_before == n - i);
            if (trace[i].reason == minorclique::PeelReason::Selected)
                selected.push_back(trace[i].vertex);
        }
        // Exactly the target vertices get selected: clique members are never
        // non-neighbor casualties, and min-degree deletes only fire off-target.
        std::sort(selected.begin(), selected.end());
        CHECK(selected == target);
    }
}

TEST_CASE("peeling trace rejects non-cliques") {
    Graph p3 = mctest::path(3);
    std::vector<int> notclique{0, 2};
    CHECK_THROWS_AS(minorclique::peeling_trace(p3, notclique), std::invalid_argument);
    std::vector<int> oob{5};
    CHECK_THROWS_AS(minorclique::peeling_trace(p3, oob), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "minorclique/clique.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/minor.hpp"
#include "minorclique/social.hpp"
#include "util.hpp"

using minorclique::BigInt;
using minorclique::Graph;
using minorclique::Rational;

namespace {

// Adjacent dominating pair 0,1 over a K4: contracting (0,1) makes the merged
// vertex universal and doubles the clique count of the rest.
Graph dominated_k4() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                     {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("alpha-star threshold is exact") {
    using minorclique::below_alpha_star;
    // alpha* = (2 - sqrt(2))/2 - 1/1000 ~ 0.29189.
    CHECK_FALSE(below_alpha_star(1, 3));  // 1/3 > alpha*
    CHECK(below_alpha_star(1, 4));        // 1/4 < alpha*
    CHECK(below_alpha_star(2, 7));        // ~0.2857
    CHECK_FALSE(below_alpha_star(3, 10)); // 0.3
    CHECK_FALSE(below_alpha_star(1, 2));
    CHECK(below_alpha_star(0, 1));
    // 292/1000 is above, 291/1000 is below.
    CHECK_FALSE(below_alpha_star(292, 1000));
    CHECK(below_alpha_star(291, 1000));
}

TEST_CASE("bad vertices on knowns") {
    CHECK(minorclique::bad_vertices(minorclique::complete_graph(5)).empty());
    // K(a,0): every vertex has fraction exactly 1/3.
    CHECK(minorclique::bad_vertices(minorclique::complement_of_matching({4, 0})).empty());
    // Star on 3 leaves: census 8, each leaf in 2 cliques, so leaves sit at 1/4.
    Graph s = mctest::star(3);
    auto census = minorclique::clique_census(s);
    CHECK(census.total == 8);
    CHECK(census.fractions[1] == Rational(1, 4));
    CHECK(census.fractions[0] == Rational(1, 2));
    CHECK(minorclique::bad_vertices(s) == std::vector<int>{1, 2, 3});
    // C5: fraction 3/11 everywhere, all bad.
    CHECK(minorclique::bad_vertices(mctest::cycle(5)) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("bad vertices are relabeling invariant") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = mctest::random_graph(rng, 9);
        std::vector<int> perm;
        Graph h = mctest::relabel(rng, g, &perm);
        auto bg = minorclique::bad_vertices(g);
        auto bh = minorclique::bad_vertices(h);
        std::vector<int> mapped;
        for (int v : bg) mapped.push_back(perm[v]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == bh);
    }
}

TEST_CASE("social graphs on knowns") {
    CHECK(minorclique::is_social(minorclique::complete_graph(4)).is_social);
    CHECK(minorclique::is_social(mctest::cycle(4)).is_social);
    CHECK(minorclique::is_social(mctest::cycle(5)).is_social);
    CHECK(minorclique::is_social(mctest::path(3)).is_social);
    CHECK(minorclique::is_social(mctest::star(3)).is_social);
    CHECK(minorclique::is_social(Graph(0)).is_social);
    // K(1,3) survives its full edge sweep.
    CHECK(minorclique::is_social(minorclique::complement_of_matching({1, 3})).is_social);
}

TEST_CASE("a dominated clique is not social") {
    Graph g = dominated_k4();
    CHECK(minorclique::clique_count(g) == 25);

    // The pair is adjacent and dominating.
    Graph aux = minorclique::dominating_pair_graph(g);
    CHECK(aux.adjacent(0, 1));

    // Cliques touching the pair: 25 - 16 on the leftover K4, under half.
    std::vector<int> rest{2, 3, 4, 5};
    BigInt untouched = minorclique::clique_count(g.induced(rest));
    CHECK(untouched == 16);
    CHECK(25 - untouched < Rational(25, 2));

    // Contracting the pair yields K5 and doubles the untouched count.
    Graph q = g.contracted(0, 1);
    CHECK(q == minorclique::complete_graph(5));
    CHECK(minorclique::clique_count(q) == 2 * untouched);

    auto rep = minorclique::is_social(g);
    CHECK_FALSE(rep.is_social);
    REQUIRE(rep.violating_edge.has_value());
    CHECK(*rep.violating_edge == minorclique::Edge{0, 1});
    CHECK(rep.bad_vertices == std::vector<int>{0, 1});
}

TEST_CASE("structure report on knowns") {
    // C4: nobody is bad, V' is everything, no missing degree >= 2 anywhere.
    auto c4 = minorclique::verify_structure(mctest::cycle(4));
    CHECK(c4.is_social);
    CHECK(c4.bad_vertices.empty());
    CHECK(c4.structure_violations.empty());

    // C5: everyone is bad, V' is empty, the claim holds vacuously.
    auto c5 = minorclique::verify_structure(mctest::cycle(5));
    CHECK(c5.is_social);
    CHECK(c5.bad_vertices.size() == 5);
    CHECK(c5.structure_violations.empty());

    // Star: center is the only V' member and has full degree.
    auto st = minorclique::verify_structure(mctest::star(3));
    CHECK(st.structure_violations.empty());

    CHECK_THROWS_AS(minorclique::is_social(Graph(13)), std::domain_error);
}

TEST_CASE("structure claims hold across the full small sweep") {
    // analyze_social throws logic_error if a social graph violates the
    // 300*Delta^2 / 600*Delta^3 / V'-degree claims, so surviving the sweep
    // is the assertion.
    for (int n = 0; n <= 6; ++n)
        minorclique::for_each_labeled_graph(n, [&](const Graph& g) {
            auto rep = minorclique::verify_structure(g);
            if (rep.is_social) CHECK(rep.structure_violations.empty());
        });
}

TEST_CASE("independent sets always contain a low-fraction vertex") {
    for (int n = 0; n <= 5; ++n)
        minorclique::for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(minorclique::verify_independent_fraction(g));
        });
    std::mt19937 rng(72);
    for (int rep = 0; rep < 100; ++rep)
        CHECK(minorclique::verify_independent_fraction(mctest::random_graph(rng, 9)));
    // 3K1 attains the bound with equality: every fraction is exactly 1/4.
    Graph i3(3);
    auto c = minorclique::clique_census(i3);
    for (int v = 0; v < 3; ++v) CHECK(c.fractions[v] == Rational(1, 4));
    CHECK(minorclique::verify_independent_fraction(i3));
    CHECK_THROWS_AS(minorclique::verify_independent_fraction(Graph(11)), std::domain_error);
}

TEST_CASE("no independent triple of good vertices") {
    // A 3-element independent set forces some member to fraction <= 1/4 < alpha*.
    long bad_triples = 0;
    minorclique::for_each_labeled_graph(6, [&](const Graph& g) {
        auto bad = minorclique::bad_vertices(g);
        std::uint64_t bad_mask = 0;
        for (int v : bad) bad_mask |= minorclique::bit(v);
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) {
                    std::uint64_t m = minorclique::bit(a) | minorclique::bit(b) |
                                      minorclique::bit(c);
                    if (m & bad_mask) continue;
                    if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) continue;
                    ++bad_triples;
                }
    });
    CHECK(bad_triples == 0);
}

TEST_CASE("best contraction minor, exhaustive regime") {
    using minorclique::SearchMode;
    // P3 is already extremal among its contraction minors.
    auto p3 = minorclique::best_contraction_minor(mctest::path(3));
    CHECK(p3.mode == SearchMode::Exhaustive);
    CHECK(p3.count == 6);
    CHECK(p3.graph == mctest::path(3));

    // The dominated-K4 graph contracts to K5 and nothing beats 32.
    auto dk = minorclique::best_contraction_minor(dominated_k4());
    CHECK(dk.count == 32);
    CHECK(dk.graph == minorclique::complete_graph(5));

    auto empty = minorclique::best_contraction_minor(Graph(0));
    CHECK(empty.count == 1);
}

TEST_CASE("best contraction minor dominates single contractions") {
    std::mt19937 rng(73);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 2 + rep % 5;  // 2..6
        Graph g = mctest::random_graph(rng, n);
        BigInt base = minorclique::clique_count(g);
        auto best = minorclique::best_contraction_minor(g);
        CHECK(best.count >= base);
        auto rep_social = minorclique::is_social(g);
        if (!rep_social.is_social) CHECK(best.count > base);
        if (best.count == base) CHECK(rep_social.is_social);
        for (auto [u, v] : g.edges())
            CHECK(best.count >= minorclique::clique_count(g.contracted(u, v)));
    }
}

TEST_CASE("social graph improved only by multiple contractions") {
    // Social means no *single* contraction raises the census, but deeper
    // quotients still can.  The smallest examples have 7 vertices; this is
    // one of them: census 19, yet two contractions reach a 5-vertex graph
    // with census 20.  So best_contraction_minor == census must not be
    // read as equivalent to social.
    Graph g(7, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 4}, {1, 6},
                {2, 3}, {2, 5}, {3, 4}});
    CHECK(minorclique::clique_count(g) == 19);
    CHECK(minorclique::is_social(g).is_social);
    auto best = minorclique::best_contraction_minor(g);
    CHECK(best.count == 20);
    CHECK(best.graph.vertex_count() == 5);
    // No single contraction gets past the census.
    for (auto [u, v] : g.edges())
        CHECK(minorclique::clique_count(g.contracted(u, v)) <= 19);
}

TEST_CASE("best contraction minor, greedy regime") {
    using minorclique::SearchMode;
    // 0,1 dominate a K7; contracting them gives K8, the census maximum on 8 vertices.
    std::vector<minorclique::Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                         {1, 5}, {1, 6}, {1, 7}, {1, 8}};
    for (int v = 2; v < 9; ++v)
        for (int u = 2; u < v; ++u) edges.push_back({u, v});
    Graph g(9, edges);
    auto best = minorclique::best_contraction_minor(g);
    CHECK(best.mode == SearchMode::Greedy);
    CHECK(best.count == 256);
    CHECK(best.graph == minorclique::complete_graph(8));

    // A social graph comes back unchanged even in greedy mode.
    auto k9 = minorclique::best_contraction_minor(minorclique::complete_graph(9));
    CHECK(k9.mode == SearchMode::Greedy);
    CHECK(k9.count == 512);
    CHECK(k9.graph == minorclique::complete_graph(9));
}

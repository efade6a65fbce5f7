#include <doctest.h>

#include "flowpoly/digraph.hpp"
#include "flowpoly/errors.hpp"
#include "support/random_graphs.hpp"

using namespace flowpoly;

TEST_CASE("k^{a,b,c} builder") {
    const auto g = build_kabc(2, 1, 1, 1);
    CHECK(g.edge_count() == 5);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(build_kabc(1, 3, 2, 5).edge_count() == 5);
    CHECK(build_kabc(2, 2, 1, 3).edge_count() == 9);
    for (int n = 1; n <= 5; ++n) {
        CHECK(build_kabc(n, 2, 3, 2).edge_count() == static_cast<std::size_t>(5 * n + n * (n - 1)));
    }
    CHECK_THROWS_AS(build_kabc(0, 1, 1, 1), UsageError);
    CHECK_THROWS_AS(build_kabc(2, 1, 0, 1), UsageError);
}

TEST_CASE("k^{a,b,c}(S) builder") {
    const auto plain = build_kabc_S(2, 1, 1, 1, {});
    CHECK(plain.edge_count() == 7);
    CHECK(plain.indeg(1) == 1);
    const auto g = build_kabc_S(2, 1, 1, 1, {1, 2});
    CHECK(g.edge_count() == 7);
    CHECK(g.outdeg(0) == 2);  // only the two (0,3) copies
    for (int v = 1; v <= 2; ++v) {
        int to_sink = 0;
        for (auto e : g.out_edges(v)) to_sink += g.edge(e).head == 3;
        CHECK(to_sink == 2);
    }
    CHECK_THROWS_AS(build_kabc_S(2, 1, 1, 1, {3}), UsageError);
    CHECK_THROWS_AS(build_kabc_S(2, 0, 1, 1, {}), UsageError);
}

TEST_CASE("complete graph and G(p,q)") {
    CHECK(build_complete(2).edge_count() == 6);
    CHECK(build_Gpq(2, 2).edge_count() == 4);
    CHECK(same_up_to_reordering(reverse(build_Gpq(3, 2)), build_Gpq(2, 3)));
}

TEST_CASE("reversal") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = testsupport::random_graph(seed);
        const auto r = reverse(g);
        CHECK(reverse(r) == g);
        CHECK(r.edge_count() == g.edge_count());
        for (int i = 1; i <= g.n(); ++i) CHECK(r.indeg(i) == g.outdeg(g.n() + 1 - i));
    }
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                CHECK(same_up_to_reordering(reverse(build_kabc(n, a, b, 2)), build_kabc(n, b, a, 2)));
                for (unsigned mask = 0; mask < (1U << n); ++mask) {
                    SubsetS s;
                    SubsetS rest;
                    for (int i = 1; i <= n; ++i) ((mask >> (i - 1)) & 1U ? s : rest).insert(i);
                    // Vertex i of the reverse is n+1-i of the original.
                    SubsetS mirrored;
                    for (int i : rest) mirrored.insert(n + 1 - i);
                    if (a >= 2) {
                        CHECK(same_up_to_reordering(reverse(build_kabc_S(n, a, b, 1, s)),
                                                    build_kabc_S(n, b + 1, a - 1, 1, mirrored)));
                    }
                }
            }
        }
    }
}

TEST_CASE("reduction rule") {
    const Multigraph path(1, {{0, 1}, {1, 2}});
    const auto [g1, g2] = reduce(path, 0, 1);
    CHECK(g1.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g2.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g1.edge_count() == path.edge_count());
    CHECK_THROWS_AS(reduce(path, 1, 0), UsageError);
}

TEST_CASE("reduction leaves") {
    const Multigraph path(2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(reduction_leaves(path) == std::vector<Multigraph>{path});
    CHECK(reduction_leaves(build_complete(2)).size() == 1);
    CHECK(reduction_leaves(build_complete(3)).size() == 2);
    CHECK_THROWS_AS(reduction_leaves(Multigraph(2, {{0, 1}, {1, 3}})), UsageError);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = testsupport::random_graph(100 + seed);
        const auto leaves = reduction_leaves(g);
        for (const auto& leaf : leaves) {
            CHECK(leaf.has_unique_source_and_sink());
            for (int v = 1; v <= leaf.n(); ++v) CHECK(leaf.outdeg(v) == 1);
        }
        for (std::uint64_t order = 0; order < 10; ++order) {
            CHECK(reduction_leaves_randomized(g, order).size() == leaves.size());
        }
    }
}

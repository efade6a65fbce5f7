#include <doctest.h>

#include <set>

#include "flowpoly/dkk.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/volumes.hpp"
#include "support/random_graphs.hpp"

using namespace flowpoly;

namespace {

std::set<IntegerFlow> flows_at_indegree(const Multigraph& g) {
    const auto all = enumerate_flows(g, indegree_netflow(g));
    return {all.begin(), all.end()};
}

}  // namespace

TEST_CASE("default framing") {
    const auto g = build_Gpq(2, 2);
    const auto fr = default_framing(g);
    CHECK(fr.in_order[1] == std::vector<EdgeId>{0, 1});
    CHECK(fr.out_order[1] == std::vector<EdgeId>{2, 3});
    const auto k4 = build_complete(2);
    const auto fk = default_framing(k4);
    const auto& out1 = fk.out_order[1];
    REQUIRE(out1.size() == 2);
    CHECK(k4.edge(out1[0]) == Edge{1, 2});
    CHECK(k4.edge(out1[1]) == Edge{1, 3});
    check_framing(g, shuffled_framing(g, 3));
    auto bad = fr;
    bad.in_order[1] = {0, 0};
    CHECK_THROWS_AS(check_framing(g, bad), UsageError);
}

TEST_CASE("coherence") {
    const auto g = build_Gpq(2, 2);
    const auto fr = default_framing(g);
    const Route e1f1{0, 2}, e1f2{0, 3}, e2f1{1, 2}, e2f2{1, 3};
    CHECK(coherent(g, fr, e1f2, e1f2));
    CHECK_FALSE(coherent(g, fr, e1f2, e2f1));
    CHECK(coherent(g, fr, e1f1, e2f2));
    CHECK(coherent(g, fr, e1f1, e1f2));

    // Two routes through different middle vertices.
    const Multigraph h(2, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(coherent(h, default_framing(h), Route{0, 2}, Route{1, 3}));
}

TEST_CASE("maximal cliques of small graphs") {
    const auto g = build_Gpq(2, 2);
    const auto cliques = max_cliques(g, default_framing(g));
    REQUIRE(cliques.size() == 2);
    for (const auto& c : cliques) CHECK(c.size() == 3);

    const auto k4 = build_complete(2);
    const auto ck = max_cliques(k4, default_framing(k4));
    REQUIRE(ck.size() == 1);
    CHECK(ck[0].size() == 4);

    const auto k5 = build_complete(3);
    CHECK(max_cliques(k5, default_framing(k5)).size() == 2);
}

TEST_CASE("clique counts equal volumes under several framings") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = testsupport::random_graph(900 + seed);
        const auto vol = volume_via_kpf(g);
        const auto flows = flows_at_indegree(g);
        for (std::uint64_t f = 0; f < 3; ++f) {
            const auto fr = f == 0 ? default_framing(g) : shuffled_framing(g, seed * 7 + f);
            const auto cliques = max_cliques(g, fr);
            CHECK(BigInt(cliques.size()) == vol);
            std::set<IntegerFlow> images;
            for (const auto& c : cliques) {
                CHECK(c.size() == g.edge_count() - static_cast<std::size_t>(g.n()));
                const auto img = omega(g, c);
                CHECK(flows.count(img) == 1);
                images.insert(img);
                CHECK(omega_inverse(g, fr, img) == c);
            }
            CHECK(images == flows);
        }
    }
}

TEST_CASE("omega on simplex graphs and G(2,2)") {
    const Multigraph simplex(2, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const auto fr = default_framing(simplex);
    const auto cliques = max_cliques(simplex, fr);
    REQUIRE(cliques.size() == 1);
    const auto flows = enumerate_flows(simplex, indegree_netflow(simplex));
    REQUIRE(flows.size() == 1);
    CHECK(omega(simplex, cliques[0]) == flows[0]);
    CHECK(theta(simplex, fr, flows[0]) == enumerate_flows(reverse(simplex), indegree_netflow(reverse(simplex)))[0]);

    const auto g = build_Gpq(2, 2);
    const auto fg = default_framing(g);
    std::set<IntegerFlow> images;
    for (const auto& c : max_cliques(g, fg)) images.insert(omega(g, c));
    CHECK(images == std::set<IntegerFlow>{{0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK_THROWS_AS(omega(g, Clique{{0, 2}}), InvariantError);
    CHECK_THROWS_AS(omega_inverse(g, fg, {0, 0, 2, 0}), InvariantError);
}

TEST_CASE("reverse framing and reversed cliques") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto g = testsupport::random_graph(1200 + seed);
        const auto fr = shuffled_framing(g, seed);
        const auto gr = reverse(g);
        const auto frr = reverse_framing(g, fr);
        CHECK(reverse_framing(gr, frr) == fr);
        const auto cliques = max_cliques(g, fr);
        const auto rcliques = max_cliques(gr, frr);
        CHECK(cliques.size() == rcliques.size());
        std::set<Clique> reversed;
        for (const auto& c : cliques) reversed.insert(reverse_clique(c));
        CHECK(reversed == std::set<Clique>(rcliques.begin(), rcliques.end()));
    }
}

TEST_CASE("theta is a bijection") {
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            for (int c = 1; c <= 2; ++c) {
                const auto g = build_kabc(2, a, b, c);
                const auto fr = default_framing(g);
                const auto domain = flows_at_indegree(g);
                const auto codomain = flows_at_indegree(reverse(g));
                CHECK(domain.size() == codomain.size());
                const auto pairs = theta_pairs(g, fr);
                std::set<IntegerFlow> seen_domain, seen_image;
                for (const auto& [f, t] : pairs) {
                    seen_domain.insert(f);
                    seen_image.insert(t);
                }
                CHECK(seen_domain == domain);
                CHECK(seen_image == codomain);
                if (!pairs.empty()) CHECK(theta(g, fr, pairs.front().first) == pairs.front().second);
            }
        }
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = testsupport::random_graph(1500 + seed);
        const auto pairs = theta_pairs(g, shuffled_framing(g, seed));
        std::set<IntegerFlow> image;
        for (const auto& pr : pairs) image.insert(pr.second);
        CHECK(image == flows_at_indegree(reverse(g)));
    }
}

TEST_CASE("spanning trees of G(p,q)") {
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            const auto g = build_Gpq(p, q);
            for (std::uint64_t s = 0; s < 3; ++s) {
                const auto fr = s == 0 ? default_framing(g) : shuffled_framing(g, s);
                const auto cliques = max_cliques(g, fr);
                std::set<std::vector<std::pair<int, int>>> trees;
                for (const auto& c : cliques) {
                    const auto tree = clique_to_tree(g, fr, c);
                    CHECK(static_cast<int>(tree.size()) == p + q - 1);
                    trees.insert(tree);
                    std::vector<std::int64_t> left(static_cast<std::size_t>(p), 0), right(static_cast<std::size_t>(q), 0);
                    for (const auto& [i, j] : tree) {
                        ++left[static_cast<std::size_t>(i - 1)];
                        ++right[static_cast<std::size_t>(j - 1)];
                    }
                    // Right degrees minus one give the flow on G(p,q), left
                    // degrees minus one its image on G(q,p).
                    const auto f = omega(g, c);
                    const auto t = theta(g, fr, f);
                    for (int j = 1; j <= q; ++j) CHECK(f[fr.out_order[1][static_cast<std::size_t>(j - 1)]] == right[static_cast<std::size_t>(j - 1)] - 1);
                    for (int i = 1; i <= p; ++i) CHECK(t[fr.in_order[1][static_cast<std::size_t>(i - 1)]] == left[static_cast<std::size_t>(i - 1)] - 1);
                }
                CHECK(trees.size() == cliques.size());
                if (p == 1) {
                    REQUIRE(cliques.size() == 1);
                    for (const auto& [i, j] : clique_to_tree(g, fr, cliques[0])) CHECK(i == 1);
                }
            }
        }
    }
    const auto g = build_Gpq(2, 2);
    const auto fr = default_framing(g);
    const auto cliques = max_cliques(g, fr);
    CHECK(clique_to_tree(g, fr, cliques[0]) != clique_to_tree(g, fr, cliques[1]));
    CHECK_THROWS_AS(clique_to_tree(g, fr, Clique{{0, 2}, {1, 3}}), InvariantError);
    CHECK_THROWS_AS(clique_to_tree(build_complete(2), default_framing(build_complete(2)), {}), UsageError);
}

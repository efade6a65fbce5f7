#include <doctest.h>

#include <random>

#include "flowpoly/errors.hpp"
#include "flowpoly/flows.hpp"
#include "support/random_graphs.hpp"

using namespace flowpoly;

TEST_CASE("enumerate small flow sets") {
    const auto k4 = build_complete(2);
    const auto zero = enumerate_flows(k4, NetFlow(4, 0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == IntegerFlow(6, 0));

    const auto one = enumerate_flows(k4, {0, 0, 1, -1});
    REQUIRE(one.size() == 1);
    // Edge order of k4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
    CHECK(one[0] == IntegerFlow{0, 0, 0, 0, 0, 1});

    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; q <= 4; ++q) {
            const auto g = build_Gpq(p, q);
            const auto flows = enumerate_flows(g, {0, p - 1, 1 - p});
            CHECK(flows.size() == binomial(p + q - 2, p - 1));
            CHECK(std::is_sorted(flows.begin(), flows.end()));
        }
    }
    CHECK(enumerate_flows(build_Gpq(2, 2), {0, 1, -1}).size() == 2);
    CHECK(enumerate_flows(k4, {0, -1, 0, 1}).empty());
    CHECK_THROWS_AS(enumerate_flows(k4, {1, -1}), UsageError);
    CHECK_THROWS_AS(kpf(k4, {1, 0, 0, 0}), UsageError);
}

TEST_CASE("kpf matches enumeration and a brute-force count") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = testsupport::random_graph(seed);
        const auto a = indegree_netflow(g);
        const auto flows = enumerate_flows(g, a);
        CHECK(kpf(g, a) == flows.size());
        CHECK(flows.size() == testsupport::brute_force_count(g, a));
        for (const auto& f : flows) CHECK(is_flow(g, a, f));
    }
}

TEST_CASE("kpf values") {
    CHECK(kpf(build_complete(4), {0, 0, 1, 2, 3, -6}) == 10);
    CHECK(kpf(build_complete(5), {0, 0, 1, 2, 3, 4, -10}) == 140);
    CHECK(kpf(build_complete(5), NetFlow(7, 0)) == 1);
    CHECK(kpf(build_kabc(2, 2, 1, 1), {0, 1, 2, -3}) == 2);
}

TEST_CASE("kpf is invariant under reversal at indegree netflows") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = testsupport::random_graph(200 + seed);
        const auto r = reverse(g);
        CHECK(kpf(g, indegree_netflow(g)) == kpf(r, indegree_netflow(r)));
    }
}

TEST_CASE("routes") {
    CHECK(routes(build_Gpq(2, 2)).size() == 4);
    CHECK(routes(Multigraph(2, {{0, 1}, {1, 2}, {2, 3}})).size() == 1);
    CHECK(routes(build_kabc(2, 1, 1, 1)).size() == 3);
    const auto k4 = routes(build_complete(2));
    CHECK(k4.size() == 4);
    CHECK(std::is_sorted(k4.begin(), k4.end()));
    CHECK(route_vertices(build_complete(2), k4.front()) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("Ehrhart volume oracle") {
    CHECK(ehrhart_volume(build_Gpq(2, 2), {1, 0, -1}) == 2);
    CHECK(ehrhart_volume(build_Gpq(3, 4), {1, 0, -1}) == binomial(5, 2));
    CHECK(ehrhart_volume(Multigraph(2, {{0, 1}, {1, 2}, {2, 3}}), {1, 0, 0, -1}) == 1);
    CHECK(ehrhart_volume(build_complete(3), {1, 0, 0, 0, -1}) == 2);
    CHECK_THROWS_AS(ehrhart_volume(build_Gpq(2, 2), {0, -1, 1}), UsageError);
    // Dilation by 2 of a 2-dimensional polytope of volume 2.
    CHECK(ehrhart_volume(build_Gpq(2, 2), {2, 0, -2}) == 8);
    // Flow on the (0,1) edges is forced to 0: lower-dimensional, volume 0.
    CHECK(ehrhart_volume(build_Gpq(2, 2), {0, 1, -1}) == 0);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = testsupport::random_graph(300 + seed);
        CHECK(ehrhart_volume(g, unit_netflow(g)) == kpf(g, indegree_netflow(g)));
    }
}

#include <doctest.h>

#include <set>

#include "flowpoly/errors.hpp"
#include "flowpoly/refine.hpp"
#include "flowpoly/volumes.hpp"
#include "support/random_graphs.hpp"

using namespace flowpoly;

namespace {

// Psi by brute force: each net flow vector is listed explicitly and counted
// with the flow counter from the test support, not with kpf.
BigInt psi_brute(int n, int k, int a, int b, int c) {
    const auto g = build_kabc(n, a, b, c);
    BigInt total = 0;
    std::vector<std::int64_t> inner(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int strict) -> void {
        if (i == n) {
            if (strict != k) return;
            NetFlow net{0};
            std::int64_t sum = 0;
            for (auto x : inner) {
                net.push_back(x);
                sum += x;
            }
            net.push_back(-sum);
            total += testsupport::brute_force_count(g, net);
            return;
        }
        const std::int64_t top = a - 1 + static_cast<std::int64_t>(c) * i;
        for (std::int64_t x = -6; x <= top; ++x) {
            inner[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, strict + (x < top ? 1 : 0));
        }
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

TEST_CASE("morris via kpf") {
    CHECK(morris_via_kpf(2, 1, 1, 1) == 1);
    CHECK(morris_via_kpf(3, 1, 1, 1) == 2);
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int c = 0; c <= 2; ++c) CHECK(morris_via_kpf(1, a, b, c) == binomial(a + b - 2, a - 1));
        }
    }
    CHECK(morris_via_kpf(2, 0, 1, 1) == 0);
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                for (int c = 0; c <= 2; ++c) CHECK(BigRational(morris_via_kpf(n, a, b, c)) == morris(n, a, b, c));
            }
        }
    }
}

TEST_CASE("psi by enumeration, brute force and volumes") {
    CHECK(psi_via_kpf(2, 1, 2, 1, 1) == 6);
    CHECK(psi_via_kpf(2, 2, 1, 1, 1) == 0);
    CHECK(psi_via_volumes(2, 1, 1, 1, 1) == 1);
    for (int n = 1; n <= 2; ++n) {
        for (int a = 1; a <= 2; ++a) {
            for (int c = 0; c <= 1; ++c) {
                for (int k = 0; k <= n; ++k) CHECK(psi_via_kpf(n, k, a, 1, c) == psi_brute(n, k, a, 1, c));
            }
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                for (int c = 0; c <= 2; ++c) {
                    const auto all = psi_via_kpf_all(n, a, b, c);
                    BigInt sum = 0;
                    for (int k = 0; k <= n; ++k) {
                        INFO("n=", n, " k=", k, " a=", a, " b=", b, " c=", c);
                        CHECK(psi_via_volumes(n, k, a, b, c) == all[static_cast<std::size_t>(k)]);
                        CHECK(BigRational(all[static_cast<std::size_t>(k)]) == psi_product(n, k, a, b, c));
                        sum += all[static_cast<std::size_t>(k)];
                    }
                    CHECK(all[0] == morris_via_kpf(n, a, b, c));
                    CHECK(sum == morris_via_kpf(n, a, b + 1, c));
                    if (a >= 2) CHECK(all[static_cast<std::size_t>(n)] == morris_via_kpf(n, a - 1, b + 1, c));
                }
            }
        }
    }
}

TEST_CASE("psi at a = b = c = 1 is a Narayana refinement") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(psi_via_kpf(n, k, 1, 1, 1) == narayana(n, k + 1) * catalan_product(n));
    }
}

TEST_CASE("phi by enumeration") {
    CHECK(phi_via_kpf(2, 1, 1, 1, 1) == 1);
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                for (int c = 0; c <= 2; ++c) {
                    CHECK(phi_via_kpf(n, 0, a, b, c) == morris_via_kpf(n, a, b, c));
                    for (int k = 0; k <= n; ++k) {
                        INFO("n=", n, " k=", k, " a=", a, " b=", b, " c=", c);
                        const BigRational v(phi_via_kpf(n, k, a, b, c));
                        CHECK(v == phi_scaled(n, k, a, b, c));
                        CHECK(v * BigRational(factorial(k) * factorial(n - k)) == phi_product(n, k, a, b, c));
                    }
                }
            }
        }
    }
}

TEST_CASE("subdivision of k^{a,b+1,c}") {
    const auto pieces = subdivide_kabc(2, 1, 1, 1);
    REQUIRE(pieces.size() == 4);
    int by_size[3] = {0, 0, 0};
    BigInt total = 0;
    for (const auto& [s, g] : pieces) {
        ++by_size[s.size()];
        CHECK(same_up_to_reordering(g, build_kabc_S(2, 1, 1, 1, s)));
        if (g.has_unique_source_and_sink()) total += volume_via_kpf(g);
    }
    CHECK(by_size[0] == 1);
    CHECK(by_size[1] == 2);
    CHECK(by_size[2] == 1);
    CHECK(total == 2);
    CHECK(BigRational(total) == morris(2, 1, 2, 1));

    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 2; ++a) {
            for (int c = 0; c <= 1; ++c) {
                const auto parts = subdivide_kabc(n, a, 2, c);
                CHECK(parts.size() == (1U << n));
                BigInt sum = 0;
                for (const auto& [s, g] : parts) {
                    CHECK(same_up_to_reordering(g, build_kabc_S(n, a, 2, c, s)));
                    if (g.has_unique_source_and_sink()) sum += volume_via_kpf(g);
                }
                CHECK(sum == volume_via_kpf(build_kabc(n, a, 3, c)));
            }
        }
    }
}

TEST_CASE("contraction of the edge (0,1)") {
    const auto big = build_kabc(3, 1, 1, 1);
    const auto small = build_kabc(2, 2, 1, 1);
    CHECK(contract(3, 1, 1, IntegerFlow(big.edge_count(), 0)) == IntegerFlow(small.edge_count(), 0));
    CHECK(contract_inverse(3, 1, 1, IntegerFlow(small.edge_count(), 0)) == IntegerFlow(big.edge_count(), 0));

    // All Psi net flows with zero at vertex 1.
    const std::int64_t top2 = 1, top3 = 2;
    std::size_t flows_seen = 0;
    for (std::int64_t a2 = 0; a2 <= top2; ++a2) {
        for (std::int64_t a3 = -a2; a3 <= top3; ++a3) {
            const NetFlow wide{0, 0, a2, a3, -(a2 + a3)};
            const NetFlow narrow{0, a2, a3, -(a2 + a3)};
            const auto left = enumerate_flows(big, wide);
            const auto right = enumerate_flows(small, narrow);
            CHECK(left.size() == right.size());
            std::set<IntegerFlow> images;
            for (const auto& f : left) {
                const auto g = contract(3, 1, 1, f);
                CHECK(is_flow(small, narrow, g));
                CHECK(contract_inverse(3, 1, 1, g) == f);
                images.insert(g);
            }
            CHECK(images.size() == right.size());
            flows_seen += left.size();
        }
    }
    CHECK(flows_seen > 0);

    IntegerFlow bad(big.edge_count(), 0);
    bad[0] = 1;
    CHECK_THROWS_AS(contract(3, 1, 1, bad), UsageError);
    CHECK_THROWS_AS(contract(1, 1, 1, IntegerFlow{}), UsageError);

    for (int k = 0; k <= 2; ++k) CHECK(psi_via_kpf(3, k, 1, 1, 1) == psi_via_kpf(2, k, 2, 1, 1));
}

TEST_CASE("relation suite on enumeration values") {
    const auto src = enumeration_source();
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 2; ++a) {
            for (int b = 1; b <= 2; ++b) {
                for (int c = 0; c <= 1; ++c) {
                    for (const auto& r : check_relations(n, a, b, c, src)) {
                        INFO(r.relation, " ", r.params);
                        CHECK(r.pass);
                    }
                }
            }
        }
    }
}

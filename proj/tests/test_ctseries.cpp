#include <doctest.h>

#include <random>

#include "flowpoly/ctseries.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/formulas.hpp"
#include "flowpoly/refine.hpp"

using namespace flowpoly;

TEST_CASE("series arithmetic") {
    TruncatedSeries x(2, 3);
    x.add({1, 0, 0}, 1);
    TruncatedSeries y(2, 3);
    y.add({0, -1, 0}, 2);
    y.add({0, 0, 0}, 1);
    const auto p = x * y;
    CHECK(p.coefficient({1, -1, 0}) == 2);
    CHECK(p.coefficient({1, 0, 0}) == 1);
    CHECK(p.constant_term(1).terms().empty());
    CHECK(y.constant_term(2).coefficient({0, 0, 0}) == 1);
    CHECK(y.min_exponent(2) == -1);
    CHECK_THROWS_AS(x.add({4, 0, 0}, 1), InvariantError);
    CHECK_THROWS_AS(x.shifted(1, 3), InvariantError);
}

TEST_CASE("residue of a derivative vanishes") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries s(3, 6);
        for (int t = 0; t < 15; ++t) s.add({exp(rng), exp(rng), exp(rng), 0}, BigRational(val(rng), 1 + trial % 3));
        for (int var = 1; var <= 3; ++var) {
            TruncatedSeries xv(3, 6);
            TruncatedSeries::Key key{0, 0, 0, 0};
            key[static_cast<std::size_t>(var - 1)] = 1;
            xv.add(key, 1);
            CHECK((xv * s.derivative(var)).constant_term(var).terms().empty());
            if (!s.constant_term(var).terms().empty()) CHECK(s.derivative(var).shifted(var, 1).constant_term(var).terms().empty());
        }
    }
}

TEST_CASE("constant terms of the Morris family") {
    CHECK(ct_morris(2, 1, 1, 1) == 1);
    CHECK(BigRational(ct_morris(3, 2, 2, 1)) == morris(3, 2, 2, 1));
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 0; c <= 2; ++c) CHECK(ct_morris(1, a, b, c) == binomial(a + b - 2, a - 1));
        }
    }
    CHECK(ct_psi(2, 1, 2, 1, 1) == 6);
    CHECK(ct_phi(2, 1, 1, 1, 1) == 1);
    CHECK_THROWS_AS(ct_morris(4, 1, 1, 1), UsageError);
}

TEST_CASE("constant terms agree with closed forms and enumeration") {
    for (int n = 1; n <= 3; ++n) {
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                for (int c = 0; c <= 2; ++c) {
                    INFO("n=", n, " a=", a, " b=", b, " c=", c);
                    const auto m = ct_morris(n, a, b, c);
                    CHECK(BigRational(m) == morris(n, a, b, c));
                    CHECK(m == morris_via_kpf(n, a, b, c));
                    const auto psi = psi_via_kpf_all(n, a, b, c);
                    for (int k = 0; k <= n; ++k) {
                        INFO("k=", k);
                        const auto p = ct_psi(n, k, a, b, c);
                        CHECK(p == psi[static_cast<std::size_t>(k)]);
                        CHECK(BigRational(p) == psi_product(n, k, a, b, c));
                        const auto f = ct_phi(n, k, a, b, c);
                        CHECK(BigRational(f) == phi_scaled(n, k, a, b, c));
                        CHECK(f == phi_via_kpf(n, k, a, b, c));
                    }
                    CHECK(ct_psi(n, 0, a, b, c) == m);
                }
            }
        }
    }
}

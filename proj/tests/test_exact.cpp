#include <doctest.h>

#include <cmath>

#include "flowpoly/errors.hpp"
#include "flowpoly/exact.hpp"

using namespace flowpoly;

namespace {

// Dyck paths of semilength n bucketed by number of peaks.
std::vector<int> dyck_peaks(int n) {
    std::vector<int> by_peaks(static_cast<std::size_t>(n + 1), 0);
    for (unsigned mask = 0; mask < (1U << (2 * n)); ++mask) {
        int height = 0;
        int peaks = 0;
        int ups = 0;
        bool ok = true;
        bool prev_up = false;
        for (int i = 0; i < 2 * n && ok; ++i) {
            const bool up = (mask >> i) & 1U;
            if (up) ++ups;
            height += up ? 1 : -1;
            if (!up && prev_up) ++peaks;
            prev_up = up;
            ok = height >= 0;
        }
        if (ok && height == 0 && ups == n) ++by_peaks[static_cast<std::size_t>(peaks)];
    }
    return by_peaks;
}

}  // namespace

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(2, 1) == 2);
    for (int n = 1; n < 50; ++n) {
        for (int k = 0; k < 50; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
}

TEST_CASE("catalan and narayana against Dyck path counts") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    for (int n = 1; n <= 7; ++n) {
        const auto peaks = dyck_peaks(n);
        int total = 0;
        for (int k = 1; k <= n; ++k) {
            CHECK(narayana(n, k) == peaks[static_cast<std::size_t>(k)]);
            total += peaks[static_cast<std::size_t>(k)];
        }
        CHECK(catalan(n) == total);
    }
    CHECK(catalan(5) == 42);
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(2, 3) == 0);
    CHECK(narayana(9, 1) == 1);
    CHECK_THROWS_AS(narayana(0, 1), UsageError);
    for (int n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for (int k = 1; k <= n; ++k) sum += narayana(n, k);
        CHECK(sum == catalan(n));
    }
}

TEST_CASE("factorials and multinomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    CHECK(multinomial({2, 1, 1}) == 12);
    CHECK(multinomial({}) == 1);
}

TEST_CASE("gamma at half integers") {
    CHECK(gamma_exact(BigRational(1, 2)) == HalfGammaValue(1, 1));
    CHECK(gamma_exact(3) == HalfGammaValue(2, 0));
    CHECK(gamma_exact(BigRational(5, 2)) == HalfGammaValue(BigRational(3, 4), 1));
    CHECK_THROWS_AS(gamma_exact(0), UsageError);
    CHECK_THROWS_AS(gamma_exact(BigRational(-1, 2)), UsageError);
    CHECK_THROWS_AS(gamma_exact(BigRational(1, 3)), UsageError);

    for (int twice = 1; twice <= 40; ++twice) {
        const BigRational x(twice, 2);
        CHECK(gamma_exact(x + 1) == gamma_exact(x) * x);
    }
    // Legendre duplication.
    for (int twice = 1; twice <= 20; ++twice) {
        const BigRational x(twice, 2);
        const auto lhs = gamma_exact(x + BigRational(1, 2)) * gamma_exact(x);
        BigRational power = 1;
        const BigRational exponent = 1 - 2 * x;
        const auto e = static_cast<int>(numerator(exponent));
        for (int i = 0; i < std::abs(e); ++i) power *= 2;
        if (e < 0) power = 1 / power;
        const auto rhs = gamma_exact(2 * x) * HalfGammaValue(power, 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rationality is enforced on conversion") {
    CHECK(HalfGammaValue(BigRational(3, 2), 0).to_rational() == BigRational(3, 2));
    CHECK(HalfGammaValue(0, 3).to_rational() == 0);
    CHECK_THROWS_AS(HalfGammaValue(1, 1).to_rational(), InvariantError);
    const auto v = gamma_half(1) / gamma_half(3);
    CHECK(v.to_rational() == 2);
}

TEST_CASE("determinant, rank and logarithms") {
    RationalMatrix m{{2, 1}, {4, 3}};
    CHECK(determinant(m) == 2);
    CHECK(rank(m) == 2);
    RationalMatrix singular{{1, 2, 3}, {2, 4, 6}};
    CHECK(rank(singular) == 1);
    CHECK(determinant(RationalMatrix{}) == 1);
    CHECK(log_big(BigInt(1)) == doctest::Approx(0.0));
    BigInt big = 1;
    big <<= 200;
    CHECK(log_big(big) == doctest::Approx(200 * std::log(2.0)));
    CHECK(to_string(BigRational(6, 4)) == "3/2");
}

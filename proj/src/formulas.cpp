#include "flowpoly/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flowpoly/errors.hpp"

namespace flowpoly {

namespace {

void check_morris_params(int n, int a, int b, int c) {
    if (n < 1) throw UsageError("need n >= 1");
    if (a < 0 || b < 1 || c < 0) throw UsageError("need a >= 0, b >= 1, c >= 0");
}

void check_k(int n, int k) {
    if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
}

// x + y*c/2 as an exact rational.
BigRational half_step(std::int64_t x, std::int64_t y, int c) {
    return BigRational(2 * x + y * c, 2);
}

}  // namespace

BigRational morris(int n, int a, int b, int c) {
    check_morris_params(n, a, b, c);
    if (a == 0) return 0;
    HalfGammaValue value;
    for (std::int64_t j = 0; j < n; ++j) {
        value *= gamma_half(2 * (a - 1 + b) + (n - 1 + j) * c);
        value *= gamma_half(c + 2);
        value /= gamma_half(2 * a + j * c);
        value /= gamma_half(2 * b + j * c);
        value /= gamma_half((j + 1) * c + 2);
    }
    return value.to_rational();
}

BigRational morris_alternate(int n, int a, int b, int c) {
    check_morris_params(n, a, b, c);
    if (c == 0) throw UsageError("alternate form needs c > 0");
    if (a == 0) return 0;
    HalfGammaValue value(BigRational(1, factorial(n)), 0);
    for (std::int64_t j = 0; j < n; ++j) {
        value *= gamma_half(2 * (a - 1 + b) + (n - 1 + j) * c);
        value *= gamma_half(c);
        value /= gamma_half(2 * a + j * c);
        value /= gamma_half(2 * b + j * c);
        value /= gamma_half((j + 1) * c);
    }
    return value.to_rational();
}

BigRational psi_product(int n, int k, int a, int b, int c) {
    check_morris_params(n, a, b, c);
    check_k(n, k);
    BigRational value = BigRational(binomial(n, k)) * morris(n, a, b, c);
    for (int j = 1; j <= k && value != 0; ++j) {
        value *= half_step(a - 1, n - j, c) / half_step(b, j - 1, c);
    }
    return value;
}

BigRational phi_product(int n, int k, int a, int b, int c) {
    check_morris_params(n, a, b, c);
    check_k(n, k);
    BigRational value = BigRational(factorial(n)) * morris(n, a, b, c);
    if (value == 0) return 0;
    for (int j = 1; j <= k; ++j) {
        if (half_step(a - 1, n - j, c) == 0) return 0;
    }
    for (int j = 1; j <= k; ++j) {
        const BigRational den = half_step(a + b - 2, 2 * n - j - 1, c);
        if (den == 0) throw InvariantError("phi product has a vanishing denominator");
        value *= half_step(a - 1, n - j, c) / den;
    }
    return value;
}

BigRational phi_scaled(int n, int k, int a, int b, int c) {
    return phi_product(n, k, a, b, c) / BigRational(factorial(k) * factorial(n - k));
}

BigInt catalan_product(int n) {
    BigInt r = 1;
    for (int i = 1; i <= n - 1; ++i) r *= catalan(i);
    return r;
}

BigRational morris_a11(int n, int a) {
    if (n < 1 || a < 1) throw UsageError("need n, a >= 1");
    BigRational value(catalan_product(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) value *= BigRational(2 * (a - 1) + i + j - 1, i + j - 1);
    }
    return value;
}

BigRational morris_a11_det(int n, int a) {
    if (n < 1 || a < 1) throw UsageError("need n, a >= 1");
    const auto size = static_cast<std::size_t>(a - 1);
    RationalMatrix m(size, std::vector<BigRational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            m[i][j] = BigRational(catalan(n - 2 + static_cast<std::int64_t>(i + j) + 2));
        }
    }
    return BigRational(catalan_product(n)) * determinant(std::move(m));
}

BigRational morris_ab1(int n, int a, int b) {
    if (n < 1 || a < 1 || b < 1) throw UsageError("need n, a, b >= 1");
    const std::int64_t s = a + b - 2;
    BigRational value(catalan_product(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) value *= BigRational(2 * s + i + j - 1, i + j - 1);
    }
    if (n % 2 == 0) {
        for (std::int64_t i = 1; i <= n / 2; ++i) {
            const std::int64_t top = 2 * a + 2 * b + 4 * i - 6;
            value *= BigRational(binomial(top, 2 * a + 2 * i - 3), binomial(top, 2 * i - 1));
        }
    } else {
        value *= BigRational(binomial(s, a - 1));
        for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) {
            const std::int64_t top = 2 * a + 2 * b + 4 * i - 4;
            value *= BigRational(binomial(top, 2 * a + 2 * i - 2), binomial(top, 2 * i));
        }
    }
    return value;
}

BigRational morris_ab2k(int n, int a, int b, int k) {
    if (n < 1 || a < 1 || b < 1 || k < 1) throw UsageError("need n, a, b, k >= 1");
    const std::int64_t s = a + b - 2;
    BigRational value(binomial(s, a - 1));
    for (std::int64_t i = 2; i <= n; ++i) {
        value *= BigRational(factorial(s + (2 * i - 3) * k) * factorial(k),
                             factorial(s + (i - 2) * k) * factorial(i * k));
        value *= BigRational(binomial(s + (2 * i - 2) * k, a - 1 + (i - 1) * k));
    }
    return value;
}

BigRational morris_11c_even(int n, int c) {
    if (n < 1 || c < 0 || c % 2 != 0) throw UsageError("need n >= 1 and even c >= 0");
    const std::int64_t h = c / 2;
    BigRational value = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        value *= BigRational(binomial((2 * i - 3) * h, (i - 1) * h) * binomial((2 * i - 2) * h, (i - 1) * h),
                             binomial(i * h, (i - 1) * h));
    }
    return value;
}

BigRational morris_11c_odd(int n, int c) {
    if (n < 1 || c < 1 || c % 2 != 1) throw UsageError("need n >= 1 and odd c");
    auto ceil_half = [](std::int64_t x) { return (x + 1) / 2; };
    BigRational value = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        BigRational step(double_factorial((2 * i - 3) * c) * double_factorial((2 * i - 2) * c) * double_factorial(c),
                         double_factorial((i - 2) * c) * double_factorial((i - 1) * c) *
                             double_factorial((i - 1) * c) * double_factorial(i * c));
        // Gamma(1 + m/2) = m!! 2^(-ceil(m/2)), times sqrt(pi) for odd m.
        const std::int64_t e = ceil_half((i - 2) * c) + 2 * ceil_half((i - 1) * c) + ceil_half(i * c) -
                               ((2 * i - 3) * c + 1) / 2 - (i - 1) * c - (c + 1) / 2;
        BigInt power = 1;
        power <<= static_cast<unsigned>(std::abs(e));
        step *= e >= 0 ? BigRational(power) : BigRational(1, power);
        value *= step;
    }
    return value;
}

BigRational psi_ka11(int n, int k, int a) {
    check_k(n, k);
    return BigRational(binomial(n, k) * binomial(n + 2 * (a - 1), k + 1), n + 2 * (a - 1)) *
           morris(n, a, 1, 1);
}

BigRational psi_k1b1(int n, int k, int b) {
    check_k(n, k);
    return BigRational(binomial(n - 1, k) * binomial(n, k), binomial(k + 2 * b - 1, k)) * morris(n, 1, b, 1);
}

BigRational psi_k11c(int n, int k, int c) {
    check_k(n, k);
    BigRational value(narayana(n, k + 1));
    for (int j = 1; j <= k && value != 0; ++j) value *= BigRational(c * (j + 1), c * (j - 1) + 2);
    return value * morris(n, 1, 1, c);
}

BigRational psi_narayana(int n, int k) {
    check_k(n, k);
    return BigRational(narayana(n, k + 1) * catalan_product(n));
}

const std::vector<std::string>& morris_special_cases() {
    static const std::vector<std::string> names{"a11", "a11-det", "ab1", "ab2k", "m11c_even", "m11c_odd"};
    return names;
}

const std::vector<std::string>& psi_special_cases() {
    static const std::vector<std::string> names{"ka11", "k1b1", "k11c", "narayana"};
    return names;
}

namespace {

void require(bool ok, const std::string& name, const std::string& what) {
    if (!ok) throw UsageError("special case " + name + " needs " + what);
}

}  // namespace

BigRational morris_special(const std::string& name, const MorrisParams& p) {
    if (name == "a11" || name == "a11-det") {
        require(p.b == 1 && p.c == 1, name, "b = 1, c = 1");
        return name == "a11" ? morris_a11(p.n, p.a) : morris_a11_det(p.n, p.a);
    }
    if (name == "ab1") {
        require(p.c == 1, name, "c = 1");
        return morris_ab1(p.n, p.a, p.b);
    }
    if (name == "ab2k") {
        require(p.c >= 2 && p.c % 2 == 0, name, "even c >= 2");
        return morris_ab2k(p.n, p.a, p.b, p.c / 2);
    }
    if (name == "m11c_even" || name == "m11c_odd") {
        require(p.a == 1 && p.b == 1, name, "a = 1, b = 1");
        return name == "m11c_even" ? morris_11c_even(p.n, p.c) : morris_11c_odd(p.n, p.c);
    }
    throw UsageError("unknown special case '" + name + "'");
}

BigRational psi_special(const std::string& name, const MorrisParams& p) {
    if (name == "ka11") {
        require(p.b == 1 && p.c == 1, name, "b = 1, c = 1");
        return psi_ka11(p.n, p.k, p.a);
    }
    if (name == "k1b1") {
        require(p.a == 1 && p.c == 1, name, "a = 1, c = 1");
        return psi_k1b1(p.n, p.k, p.b);
    }
    if (name == "k11c") {
        require(p.a == 1 && p.b == 1, name, "a = 1, b = 1");
        return psi_k11c(p.n, p.k, p.c);
    }
    if (name == "narayana") {
        require(p.a == 1 && p.b == 1 && p.c == 1, name, "a = b = c = 1");
        return psi_narayana(p.n, p.k);
    }
    throw UsageError("unknown special case '" + name + "'");
}

ValueSource closed_form_source() {
    ValueSource src;
    src.morris = [](int n, int a, int b, int c) { return morris(n, a, b, c); };
    src.psi = [](int n, int k, int a, int b, int c) { return psi_product(n, k, a, b, c); };
    src.phi_prime = [](int n, int k, int a, int b, int c) { return phi_product(n, k, a, b, c); };
    return src;
}

namespace {

std::string param_string(int n, int a, int b, int c, int k = -1) {
    std::string s = "n=" + std::to_string(n);
    if (k >= 0) s += ",k=" + std::to_string(k);
    return s + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" + std::to_string(c);
}

class Recorder {
public:
    explicit Recorder(std::vector<RelationCheck>& out) : out_(out) {}

    void operator()(std::string relation, std::string params, BigRational lhs, BigRational rhs) {
        const bool pass = lhs == rhs;
        out_.push_back({std::move(relation), std::move(params), std::move(lhs), std::move(rhs), pass});
    }

private:
    std::vector<RelationCheck>& out_;
};

}  // namespace

std::vector<RelationCheck> check_relations(int n, int a, int b, int c, const ValueSource& src) {
    if (n < 1 || a < 1 || b < 1 || c < 0) throw UsageError("relation suite needs n, a, b >= 1 and c >= 0");
    std::vector<RelationCheck> out;
    Recorder record(out);
    const std::string at = param_string(n, a, b, c);

    record("psi_top_k", at, src.psi(n, n, a, b, c), src.psi(n, 0, a - 1, b + 1, c));
    if (a == 1 && n >= 2) {
        record("psi_contract_top", at, src.psi(n, n - 1, 1, b, c), src.psi(n - 1, 0, c, b + 1, c));
    }
    if (a == 1 && c == 0) record("psi_trivial", at, src.psi(n, 0, 1, b, 0), 1);

    for (int k = 1; k <= n; ++k) {
        const BigRational left = BigRational(k) * half_step(b, k - 1, c);
        const BigRational right = BigRational(n - k + 1) * half_step(a - 1, n - k, c);
        record("psi_k_recurrence", param_string(n, a, b, c, k), left * src.psi(n, k, a, b, c),
               right * src.psi(n, k - 1, a, b, c));
        if (a >= 2) {
            record("psi_reversal_recurrence", param_string(n, a, b, c, k), left * src.psi(n, k, a, b, c),
                   right * src.psi(n, n - k + 1, b + 1, a - 1, c));
        }
    }

    BigRational total = 0;
    for (int k = 0; k <= n; ++k) total += src.psi(n, k, a, b, c);
    record("refinement_sum", at, total, src.morris(n, a, b + 1, c));

    if (a >= 2) {
        for (int k = 0; k <= n; ++k) {
            record("psi_symmetry", param_string(n, a, b, c, k), src.psi(n, k, a, b, c),
                   src.psi(n, n - k, b + 1, a - 1, c));
        }
    }
    record("morris_symmetry", at, src.morris(n, a, b, c), src.morris(n, b, a, c));

    if (a == 1 && n >= 2) {
        for (int k = 0; k <= n - 1; ++k) {
            record("psi_contraction", param_string(n, a, b, c, k), src.psi(n, k, 1, b, c),
                   src.psi(n - 1, k, c + 1, b, c));
        }
        record("morris_contraction", at, src.morris(n, 1, b, c), src.morris(n - 1, c + 1, b, c));
    }
    if (b == 1 && c == 1 && n >= 2) {
        BigRational sum = 0;
        for (int k = 0; k <= n - 1; ++k) sum += src.psi(n - 1, k, a, 1, 1);
        record("morris_a11_refinement", at, src.morris(n, a, 1, 1), sum);
    }

    if (a - 1 + b >= 2) {
        record("phi_top_k", at, src.phi_prime(n, n, a, b, c), src.phi_prime(n, 0, a - 1, b, c));
    }
    if (a == 1 && n >= 2) {
        record("phi_contract_top", at, src.phi_prime(n, n - 1, 1, b, c), src.phi_prime(n - 1, 0, c, b, c));
    }
    if (a == 1 && c == 0) record("phi_trivial", at, src.phi_prime(n, 0, 1, b, 0), BigRational(factorial(n)));
    if (a == 1 && n == 1) {
        for (int k = 0; k <= 1; ++k) {
            record("phi_vanishing", param_string(1, 0, b, c, k), src.phi_prime(1, k, 0, b, c), 0);
        }
    }
    for (int k = 1; k <= n; ++k) {
        record("phi_k_recurrence", param_string(n, a, b, c, k),
               half_step(a + b - 2, 2 * n - k - 1, c) * src.phi_prime(n, k, a, b, c),
               half_step(a - 1, n - k, c) * src.phi_prime(n, k - 1, a, b, c));
    }
    return out;
}

AsymptoticPoint asymptotic_log_morris(AsymptoticCase which, int n) {
    if (n < 2) throw UsageError("asymptotics need n >= 2");
    const double x = n;
    const double l2 = std::log(2.0);
    const double l3 = std::log(3.0);
    const double l5 = std::log(5.0);
    AsymptoticPoint p;
    p.n = n;
    switch (which) {
        case AsymptoticCase::m111:
            p.predicted = x * x * l2 - 1.5 * x * std::log(x);
            p.exact = log_big(morris(n, 1, 1, 1));
            break;
        case AsymptoticCase::mn11:
            p.predicted = (9 * l2 - 4.5 * l3) * x * x;
            p.exact = log_big(morris(n, n, 1, 1));
            break;
        case AsymptoticCase::mnn1:
            p.predicted = 2 * x * x * std::log(x) + (3 + 13 * l2 + 4.5 * l3 - 6.25 * l5) * x * x;
            p.exact = log_big(morris(n, n, n, 1));
            break;
    }
    return p;
}

}  // namespace flowpoly

#include "flowpoly/exact.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "flowpoly/errors.hpp"

namespace flowpoly {

BigInt factorial(std::int64_t n) {
    if (n < 0) throw UsageError("factorial of negative number " + std::to_string(n));
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(std::int64_t n) {
    if (n < -1) throw UsageError("double factorial of " + std::to_string(n));
    BigInt r = 1;
    for (std::int64_t i = n; i > 1; i -= 2) r *= i;
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multinomial(const std::vector<std::int64_t>& parts) {
    BigInt r = 1;
    std::int64_t total = 0;
    for (auto p : parts) {
        if (p < 0) throw UsageError("multinomial part is negative");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

BigInt catalan(std::int64_t i) {
    if (i < 0) throw UsageError("catalan index is negative");
    return binomial(2 * i, i) / (i + 1);
}

BigInt narayana(std::int64_t n, std::int64_t k) {
    if (n < 1) throw UsageError("narayana requires n >= 1");
    if (k < 1 || k > n) return 0;
    return binomial(n, k) * binomial(n, k - 1) / n;
}

BigRational HalfGammaValue::to_rational() const {
    if (coeff != 0 && pi_half_power != 0) {
        throw InvariantError("value carries pi^(" + std::to_string(pi_half_power) +
                             "/2) and is not rational");
    }
    return coeff;
}

HalfGammaValue& HalfGammaValue::operator*=(const HalfGammaValue& rhs) {
    coeff *= rhs.coeff;
    pi_half_power += rhs.pi_half_power;
    return *this;
}

HalfGammaValue& HalfGammaValue::operator/=(const HalfGammaValue& rhs) {
    if (rhs.coeff == 0) throw InvariantError("division by zero HalfGammaValue");
    coeff /= rhs.coeff;
    pi_half_power -= rhs.pi_half_power;
    return *this;
}

HalfGammaValue& HalfGammaValue::operator*=(const BigRational& rhs) {
    coeff *= rhs;
    return *this;
}

bool operator==(const HalfGammaValue& lhs, const HalfGammaValue& rhs) {
    if (lhs.coeff == 0 && rhs.coeff == 0) return true;
    return lhs.coeff == rhs.coeff && lhs.pi_half_power == rhs.pi_half_power;
}

HalfGammaValue gamma_half(std::int64_t twice_x) {
    if (twice_x <= 0) {
        throw UsageError("gamma argument " + std::to_string(twice_x) + "/2 is not positive");
    }
    if (twice_x % 2 == 0) return {BigRational(factorial(twice_x / 2 - 1)), 0};
    // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
    const std::int64_t k = (twice_x - 1) / 2;
    BigInt den = factorial(k);
    den <<= static_cast<unsigned>(2 * k);
    return {BigRational(factorial(2 * k), den), 1};
}

HalfGammaValue gamma_exact(const BigRational& x) {
    const BigInt twice = numerator(x) * 2;
    const BigInt& den = denominator(x);
    if (den != 1 && den != 2) throw UsageError("gamma_exact needs x in Z/2, got " + to_string(x));
    const BigInt twice_x = den == 1 ? twice : numerator(x);
    return gamma_half(twice_x.convert_to<std::int64_t>());
}

double log_big(const BigInt& x) {
    if (x <= 0) throw UsageError("log of nonpositive integer");
    const auto bits = boost::multiprecision::msb(x);
    const unsigned shift = bits > 60 ? static_cast<unsigned>(bits - 60) : 0U;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_big(const BigRational& x) {
    return log_big(BigInt(numerator(x))) - log_big(BigInt(denominator(x)));
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

bool is_integer(const BigRational& x) { return denominator(x) == 1; }

namespace {

// Row-reduces in place; returns (rank, sign-adjusted product of pivots).
std::pair<std::size_t, BigRational> eliminate(RationalMatrix& m) {
    BigRational det = 1;
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) {
            det = 0;
            continue;
        }
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            det = -det;
        }
        det *= m[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const BigRational factor = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return {r, det};
}

}  // namespace

BigRational determinant(RationalMatrix m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) throw UsageError("determinant of non-square matrix");
    }
    if (m.empty()) return 1;
    auto [r, det] = eliminate(m);
    return r == m.size() ? det : BigRational(0);
}

std::size_t rank(RationalMatrix m) { return eliminate(m).first; }

}  // namespace flowpoly

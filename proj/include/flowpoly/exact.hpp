#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flowpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(std::int64_t n);

// Double factorial n!! with (-1)!! = 0!! = 1.
BigInt double_factorial(std::int64_t n);

// C(n, k); zero whenever k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Multinomial coefficient (sum parts)! / prod(parts!). Parts must be >= 0.
BigInt multinomial(const std::vector<std::int64_t>& parts);

BigInt catalan(std::int64_t i);

// N(n, k) = C(n,k) C(n,k-1) / n for 1 <= k <= n, zero otherwise.
BigInt narayana(std::int64_t n, std::int64_t k);

/// A number of the form coeff * pi^(pi_half_power / 2).
///
/// Gamma at positive half-integers lands in this set, and products or
/// quotients of such values stay in it. Morris-type products are expected
/// to end with pi_half_power == 0; `to_rational` enforces that.
struct HalfGammaValue {
    BigRational coeff{1};
    std::int64_t pi_half_power = 0;

    HalfGammaValue() = default;
    HalfGammaValue(BigRational c, std::int64_t p) : coeff(std::move(c)), pi_half_power(p) {}

    // Throws InvariantError if a nonzero value still carries a power of pi.
    BigRational to_rational() const;

    HalfGammaValue& operator*=(const HalfGammaValue& rhs);
    HalfGammaValue& operator/=(const HalfGammaValue& rhs);
    HalfGammaValue& operator*=(const BigRational& rhs);

    friend HalfGammaValue operator*(HalfGammaValue lhs, const HalfGammaValue& rhs) { return lhs *= rhs; }
    friend HalfGammaValue operator/(HalfGammaValue lhs, const HalfGammaValue& rhs) { return lhs /= rhs; }
    friend HalfGammaValue operator*(HalfGammaValue lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend bool operator==(const HalfGammaValue& lhs, const HalfGammaValue& rhs);
};

// Gamma(x) for x > 0 with 2x an integer. Throws UsageError otherwise.
HalfGammaValue gamma_exact(const BigRational& x);

// Gamma(twice_x / 2).
HalfGammaValue gamma_half(std::int64_t twice_x);

// Natural log of a positive big integer, accurate to double precision.
double log_big(const BigInt& x);
double log_big(const BigRational& x);

std::string to_string(const BigInt& x);
// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& x);

bool is_integer(const BigRational& x);

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Exact determinant by Gaussian elimination over Q. Square input required.
BigRational determinant(RationalMatrix m);

// Exact rank over Q.
std::size_t rank(RationalMatrix m);

}  // namespace flowpoly

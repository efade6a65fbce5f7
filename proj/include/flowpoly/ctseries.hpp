#pragma once

#include <map>
#include <vector>

#include "flowpoly/exact.hpp"

namespace flowpoly {

/// Laurent polynomial in x_1..x_n and an auxiliary t, exponents of each x_i
/// kept in [-D, D]. Any operation that would produce an exponent outside the
/// window throws InvariantError instead of dropping the term.
class TruncatedSeries {
public:
    // Key layout: x_1..x_n exponents, then the t degree.
    using Key = std::vector<int>;

    TruncatedSeries(int n, int window);
    static TruncatedSeries one(int n, int window);

    int n() const { return n_; }
    int window() const { return window_; }
    const std::map<Key, BigRational>& terms() const { return terms_; }

    void add(const Key& key, const BigRational& coeff);
    BigRational coefficient(const Key& key) const;

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    // Products that drop terms with x_var exponent above `cap` or t degree
    // above `t_cap`; used when nothing later can lower those exponents.
    TruncatedSeries multiply_capped(const TruncatedSeries& other, int var, int cap, int t_cap) const;

    TruncatedSeries shifted(int var, int by) const;
    TruncatedSeries derivative(int var) const;
    // Coefficient of x_var^0, as a series with that exponent zero.
    TruncatedSeries constant_term(int var) const;
    // Smallest exponent of x_var among the terms; 0 when empty.
    int min_exponent(int var) const;

private:
    void check_key(const Key& key) const;

    int n_;
    int window_;
    std::map<Key, BigRational> terms_;
};

// Window (a+b+cn+2) n used by the ct_* evaluators.
int default_window(int n, int a, int b, int c);

// CT_{x_n}...CT_{x_1} of prod (1-x_i)^{-b} x_i^{-a+1} prod_{i<j} (x_j-x_i)^{-c},
// expanded in |x_1| < ... < |x_n| < 1. Requires 1 <= n <= 3 and a, b >= 1.
BigInt ct_morris(int n, int a, int b, int c);
// [t^k] of the same constant term with prod (1 + t x_i/(1-x_i)).
BigInt ct_psi(int n, int k, int a, int b, int c);
// [t^k] with prod (1 + t x_i); equals phi_scaled.
BigInt ct_phi(int n, int k, int a, int b, int c);

}  // namespace flowpoly

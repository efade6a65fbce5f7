#include "flowpoly/ctseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "flowpoly/errors.hpp"

namespace flowpoly {

TruncatedSeries::TruncatedSeries(int n, int window) : n_(n), window_(window) {
    if (n < 1) throw UsageError("series needs at least one variable");
    if (window < 0) throw UsageError("window must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(int n, int window) {
    TruncatedSeries s(n, window);
    s.add(Key(static_cast<std::size_t>(n + 1), 0), 1);
    return s;
}

void TruncatedSeries::check_key(const Key& key) const {
    if (key.size() != static_cast<std::size_t>(n_ + 1)) throw UsageError("key has the wrong length");
    for (int i = 0; i < n_; ++i) {
        if (std::abs(key[static_cast<std::size_t>(i)]) > window_) {
            throw InvariantError("exponent of x_" + std::to_string(i + 1) + " leaves the window of size " +
                                 std::to_string(window_));
        }
    }
    if (key.back() < 0) throw UsageError("negative t degree");
}

void TruncatedSeries::add(const Key& key, const BigRational& coeff) {
    if (coeff == 0) return;
    check_key(key);
    auto [it, fresh] = terms_.emplace(key, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRational TruncatedSeries::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? BigRational(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    if (other.n_ != n_) throw UsageError("variable counts differ");
    TruncatedSeries out(n_, std::max(window_, other.window_));
    for (const auto& [k, v] : terms_) out.add(k, v);
    for (const auto& [k, v] : other.terms_) out.add(k, v);
    return out;
}

TruncatedSeries TruncatedSeries::multiply_capped(const TruncatedSeries& other, int var, int cap, int t_cap) const {
    if (other.n_ != n_) throw UsageError("variable counts differ");
    TruncatedSeries out(n_, std::max(window_, other.window_));
    const auto slot = static_cast<std::size_t>(var - 1);
    for (const auto& [k1, v1] : terms_) {
        for (const auto& [k2, v2] : other.terms_) {
            Key k(k1.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = k1[i] + k2[i];
            if (var >= 1 && k[slot] > cap) continue;
            if (k.back() > t_cap) continue;
            out.add(k, v1 * v2);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    return multiply_capped(other, 0, 0, std::numeric_limits<int>::max());
}

TruncatedSeries TruncatedSeries::shifted(int var, int by) const {
    TruncatedSeries out(n_, window_);
    for (const auto& [key, v] : terms_) {
        auto k = key;
        k[static_cast<std::size_t>(var - 1)] += by;
        out.add(k, v);
    }
    return out;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
    TruncatedSeries out(n_, window_);
    for (const auto& [key, v] : terms_) {
        auto k = key;
        auto& e = k[static_cast<std::size_t>(var - 1)];
        const int power = e;
        --e;
        if (power != 0) out.add(k, v * power);
    }
    return out;
}

TruncatedSeries TruncatedSeries::constant_term(int var) const {
    TruncatedSeries out(n_, window_);
    for (const auto& [k, v] : terms_) {
        if (k[static_cast<std::size_t>(var - 1)] == 0) out.add(k, v);
    }
    return out;
}

int TruncatedSeries::min_exponent(int var) const {
    int lo = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        const int e = k[static_cast<std::size_t>(var - 1)];
        lo = first ? e : std::min(lo, e);
        first = false;
    }
    return lo;
}

int default_window(int n, int a, int b, int c) { return (a + b + c * n + 2) * n; }

namespace {

enum class TFactor { none, psi, phi };

TruncatedSeries::Key unit_key(int n) { return TruncatedSeries::Key(static_cast<std::size_t>(n + 1), 0); }

// CT over x_1, then x_2, ..., with the factors of x_j brought in just before
// its constant term is taken. Every factor series is nonnegative in x_j
// beyond a fixed monomial, so terms with positive x_j exponent are dropped
// exactly; the series degree needed is checked against the window.
BigInt evaluate(int n, int k, int a, int b, int c, TFactor tf) {
    if (n < 1 || n > 3) throw UsageError("constant-term oracle supports 1 <= n <= 3");
    if (a < 1 || b < 1 || c < 0) throw UsageError("need a, b >= 1 and c >= 0");
    if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
    const int window = default_window(n, a, b, c);
    const int t_cap = tf == TFactor::none ? 0 : k;
    auto s = TruncatedSeries::one(n, window);
    for (int j = 1; j <= n; ++j) {
        s = s.shifted(j, -(a - 1) - c * (j - 1));
        const int need = -s.min_exponent(j);
        if (need > window) {
            throw InvariantError("series degree " + std::to_string(need) + " in x_" + std::to_string(j) +
                                 " exceeds the window " + std::to_string(window));
        }
        auto factor = [&](auto&& coeff_of, int partner) {
            TruncatedSeries f(n, window);
            for (int m = 0; m <= need; ++m) {
                auto key = unit_key(n);
                key[static_cast<std::size_t>(j - 1)] = m;
                if (partner > 0) key[static_cast<std::size_t>(partner - 1)] = -m;
                f.add(key, coeff_of(m));
            }
            return f;
        };
        auto negative_binomial = [](int power) {
            return [power](int m) { return BigRational(binomial(m + power - 1, m)); };
        };
        s = s.multiply_capped(factor(negative_binomial(b), 0), j, 0, t_cap);
        if (c > 0) {
            for (int l = j + 1; l <= n; ++l) s = s.multiply_capped(factor(negative_binomial(c), l), j, 0, t_cap);
        }
        if (tf != TFactor::none) {
            TruncatedSeries f = TruncatedSeries::one(n, window);
            const int top = tf == TFactor::psi ? need : std::min(need, 1);
            for (int m = 1; m <= top; ++m) {
                auto key = unit_key(n);
                key[static_cast<std::size_t>(j - 1)] = m;
                key.back() = 1;
                f.add(key, 1);
            }
            s = s.multiply_capped(f, j, 0, t_cap);
        }
        s = s.constant_term(j);
    }
    auto key = unit_key(n);
    key.back() = t_cap;
    const BigRational v = s.coefficient(key);
    if (!is_integer(v)) throw InvariantError("constant term is not an integer");
    return numerator(v);
}

}  // namespace

BigInt ct_morris(int n, int a, int b, int c) { return evaluate(n, 0, a, b, c, TFactor::none); }

BigInt ct_psi(int n, int k, int a, int b, int c) { return evaluate(n, k, a, b, c, TFactor::psi); }

BigInt ct_phi(int n, int k, int a, int b, int c) { return evaluate(n, k, a, b, c, TFactor::phi); }

}  // namespace flowpoly

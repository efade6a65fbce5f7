#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flowpoly/exact.hpp"

namespace flowpoly {

/// Parameters of M_n(a,b,c), Psi_n(k,a,b,c) and Phi_n(k,a,b,c).
struct MorrisParams {
    int n = 1;
    int a = 1;
    int b = 1;
    int c = 0;
    int k = 0;

    // Upper bound a - 1 + c(i - 1) on the net flow at internal vertex i.
    std::int64_t bound(int i) const { return a - 1 + static_cast<std::int64_t>(c) * (i - 1); }
};

// Product of Gamma ratios; a = 0 gives 0. Requires n >= 1, b >= 1, a, c >= 0.
BigRational morris(int n, int a, int b, int c);

// Same value through the form with Gamma(c/2) and a 1/n! prefactor; c > 0.
BigRational morris_alternate(int n, int a, int b, int c);

// binom(n,k) M_n(a,b,c) prod_{j=1..k} (a-1+(n-j)c/2) / (b+(j-1)c/2).
BigRational psi_product(int n, int k, int a, int b, int c);

// n! M_n(a,b,c) prod_{j=1..k} (a-1+(n-j)c/2) / (a+b-2+(2n-j-1)c/2).
// A vanishing numerator factor makes the value 0 even when a later
// denominator factor vanishes too (a = b = 1 with c = 0 or n = 1).
BigRational phi_product(int n, int k, int a, int b, int c);

// phi_product / (k! (n-k)!).
BigRational phi_scaled(int n, int k, int a, int b, int c);

// Catalan product C_1 ... C_{n-1}.
BigInt catalan_product(int n);

// M_n(a,1,1) as the Catalan product times Proctor's product over i < j.
BigRational morris_a11(int n, int a);
// M_n(a,1,1) as the Catalan product times det[C_{n-2+i+j}], i,j = 1..a-1.
BigRational morris_a11_det(int n, int a);
// M_n(a,b,1) by the even/odd-n products.
BigRational morris_ab1(int n, int a, int b);
// M_n(a,b,2k), k >= 1, as a product of per-step ratios.
BigRational morris_ab2k(int n, int a, int b, int k);
// M_n(1,1,c) for even c.
BigRational morris_11c_even(int n, int c);
// M_n(1,1,c) for odd c.
BigRational morris_11c_odd(int n, int c);

BigRational psi_ka11(int n, int k, int a);
BigRational psi_k1b1(int n, int k, int b);
BigRational psi_k11c(int n, int k, int c);
// N(n,k+1) C_1 ... C_{n-1}.
BigRational psi_narayana(int n, int k);

// Names accepted by morris_special / psi_special.
const std::vector<std::string>& morris_special_cases();
const std::vector<std::string>& psi_special_cases();

// Dispatch by case name; parameters that a case fixes must match, otherwise
// UsageError. ab2k reads c = 2k.
BigRational morris_special(const std::string& name, const MorrisParams& p);
BigRational psi_special(const std::string& name, const MorrisParams& p);

/// Where the relation suite gets its values from.
struct ValueSource {
    std::function<BigRational(int n, int a, int b, int c)> morris;
    std::function<BigRational(int n, int k, int a, int b, int c)> psi;
    // Baldoni-Vergne Phi' = k!(n-k)! Phi.
    std::function<BigRational(int n, int k, int a, int b, int c)> phi_prime;
};

ValueSource closed_form_source();

struct RelationCheck {
    std::string relation;
    std::string params;
    BigRational lhs;
    BigRational rhs;
    bool pass = false;
};

// Every relation that applies at (n,a,b,c), evaluated through `src`.
// Requires n >= 1, a >= 1, b >= 1, c >= 0.
std::vector<RelationCheck> check_relations(int n, int a, int b, int c, const ValueSource& src);

enum class AsymptoticCase { m111, mn11, mnn1 };

struct AsymptoticPoint {
    int n = 0;
    double predicted = 0;  // leading terms only
    double exact = 0;      // log of the exact integer M value
};

// M_n(1,1,1), M_n(n,1,1) or M_n(n,n,1). Requires n >= 2.
AsymptoticPoint asymptotic_log_morris(AsymptoticCase which, int n);

}  // namespace flowpoly

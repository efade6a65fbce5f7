#pragma once

#include <utility>
#include <vector>

#include "flowpoly/digraph.hpp"
#include "flowpoly/exact.hpp"
#include "flowpoly/flows.hpp"
#include "flowpoly/formulas.hpp"

namespace flowpoly {

// K of k^{a,b,c} at (0, a_1, ..., a_n, -sum) with a_i = a-1+c(i-1).
BigInt morris_via_kpf(int n, int a, int b, int c);

/// Sum of K_{k^{a,b,c}}(0, a_1, ..., a_n, -sum) over net flows with
/// a_i <= a-1+c(i-1) and equality at exactly n-k indices.
///
/// Strict entries range over [-(sum of positive earlier bounds), bound-1];
/// below that no flow can reach vertex i.
BigInt psi_via_kpf(int n, int k, int a, int b, int c);

// All k = 0..n at once, from a single sweep over the net flows.
std::vector<BigInt> psi_via_kpf_all(int n, int a, int b, int c);

// Sum over |S| = k of vol F_{k^{a,b,c}(S)}. A graph with an internal vertex
// of in-degree 0 contributes 0 (its polytope is lower-dimensional).
// Requires a >= 1.
BigInt psi_via_volumes(int n, int k, int a, int b, int c);

// Sum of K over net flows with a_i in {bound-1, bound}, exactly n-k at the
// bound. Equals Phi = Phi' / (k!(n-k)!).
BigInt phi_via_kpf(int n, int k, int a, int b, int c);

/// The 2^n pieces of F_{k^{a,b+1,c}} obtained by one reduction at every
/// internal vertex i on the pair (0,i), (i,n+1): the child that keeps (0,i)
/// has i outside S, the other has i in S. Listed by increasing bitmask of S.
std::vector<std::pair<SubsetS, Multigraph>> subdivide_kabc(int n, int a, int b, int c);

/// Contraction of the edge (0,1) on integer flows of k^{1,b,c}_{n+2} with
/// zero net flow at vertices 0 and 1, landing on k^{c+1,b,c}_{n+1}.
///
/// Every edge leaving 0 or 1 must carry 0 (UsageError otherwise); the copy t
/// of (i,j), i >= 2, becomes copy t of (i-1,j-1). Requires n >= 2.
IntegerFlow contract(int n, int b, int c, const IntegerFlow& f);
IntegerFlow contract_inverse(int n, int b, int c, const IntegerFlow& f);

// Enumeration values for the relation suite, memoized per source.
ValueSource enumeration_source();

}  // namespace flowpoly

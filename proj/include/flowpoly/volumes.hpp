#pragma once

#include "flowpoly/digraph.hpp"
#include "flowpoly/exact.hpp"
#include "flowpoly/flows.hpp"

namespace flowpoly {

// vol F_G(1,0,...,0,-1) as K_G(0, d_1, ..., d_n, -sum d_i), d_i = indeg(i) - 1.
// Throws UsageError unless G has a unique source and sink.
BigInt volume_via_kpf(const Multigraph& g);

// Number of leaves of the deterministic reduction tree; every leaf is a
// unimodular simplex.
BigInt volume_via_subdivision(const Multigraph& g);

/// Integer-flow splitting for one reduction step at in_edge = (i,j),
/// out_edge = (j,k) of g0.
///
/// With x = f(in_edge) and y = f(out_edge): phi1 handles y <= x and lands
/// on reduce(g0,..).first, phi2 handles y > x and lands on .second. Flows
/// on the children use the same EdgeIds as g0. Net flows are the indegree
/// netflows of the respective graphs. Violated preconditions throw
/// UsageError.
IntegerFlow phi1(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f);
IntegerFlow phi1_inverse(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f1);
IntegerFlow phi2(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f);
IntegerFlow phi2_inverse(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f2);

/// Normalized volume of F_G(a) for a source-loaded net flow
/// a = (A_1 + ... + A_{n+1}, -A_1, ..., -A_{n+1}) with A_i >= 0, as
///
///   sum over weak compositions j of m-n-1 into n+1 parts of
///   multinomial(j) * prod A_i^{j_i} * K_G(0, d_1 - j_1, ..., d_{n+1} - j_{n+1})
///
/// where d_i = indeg(i) - 1 and 0^0 = 1. Requires out-degree >= 1 at 0..n
/// and in-degree >= 1 at 1..n+1.
BigInt lidskii_volume(const Multigraph& g, const NetFlow& a);

}  // namespace flowpoly

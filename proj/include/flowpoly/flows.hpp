#pragma once

#include <cstdint>
#include <vector>

#include "flowpoly/digraph.hpp"
#include "flowpoly/exact.hpp"

namespace flowpoly {

/// Per-vertex net flow, (outflow - inflow) at each vertex of {0..n+1}.
using NetFlow = std::vector<std::int64_t>;

/// Nonnegative integer value per EdgeId.
using IntegerFlow = std::vector<std::int64_t>;

/// A maximal source-to-sink path, as EdgeIds in travel order.
using Route = std::vector<EdgeId>;

// Throws UsageError if the length is not n+2 or the entries do not sum to 0.
void check_netflow(const Multigraph& g, const NetFlow& a);

// (0, d_1, ..., d_n, -sum d_i) with d_i = indeg(i) - 1.
NetFlow indegree_netflow(const Multigraph& g);

// (1, 0, ..., 0, -1).
NetFlow unit_netflow(const Multigraph& g);

// Net flow at every vertex induced by f.
NetFlow netflow_of(const Multigraph& g, const IntegerFlow& f);

bool is_flow(const Multigraph& g, const NetFlow& a, const IntegerFlow& f);

// All nonnegative integer flows with net flow a, lexicographically sorted.
// Infeasible net flows give an empty list.
std::vector<IntegerFlow> enumerate_flows(const Multigraph& g, const NetFlow& a);

// Kostant partition function K_G(a) = number of integer flows. Counted by a
// vertex-by-vertex dynamic program memoized on the inflow profile of the
// vertices not yet processed; parallel edges are merged through binomials.
BigInt kpf(const Multigraph& g, const NetFlow& a);

// All routes from 0 to n+1, lexicographic by EdgeId sequence.
std::vector<Route> routes(const Multigraph& g);

// Vertices visited by a route, starting at 0.
std::vector<Vertex> route_vertices(const Multigraph& g, const Route& r);

// dim of the affine span of {f : M_G f = a}, i.e. |E| - rank(M_G).
std::size_t constraint_dimension(const Multigraph& g);

/// Normalized volume of F_G(a) in dimension d = constraint_dimension(g),
/// from lattice-point counts of t*a for t = 0..d+1.
///
/// The d-th forward difference of the Ehrhart polynomial at 0 equals
/// d! * leading coefficient; the (d+1)-th difference must vanish, otherwise
/// InvariantError (the count is not a polynomial of degree <= d). Throws
/// UsageError when F_G(a) has no lattice points.
BigInt ehrhart_volume(const Multigraph& g, const NetFlow& a);

}  // namespace flowpoly

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flowpoly/digraph.hpp"
#include "flowpoly/flows.hpp"

namespace flowpoly {

/// Linear orders on in(v) and out(v) at every internal vertex v, as EdgeId
/// lists from smallest to largest. Entries for 0 and n+1 are left empty.
struct Framing {
    std::vector<std::vector<EdgeId>> in_order;
    std::vector<std::vector<EdgeId>> out_order;
    friend bool operator==(const Framing&, const Framing&) = default;
};

/// Pairwise coherent routes, sorted.
using Clique = std::vector<Route>;

// Orders by (other endpoint, EdgeId).
Framing default_framing(const Multigraph& g);
// Each order shuffled independently from the seed.
Framing shuffled_framing(const Multigraph& g, std::uint64_t seed);
// Throws UsageError unless every internal order is a permutation of the
// incident edges.
void check_framing(const Multigraph& g, const Framing& fr);

// Compares Ri and Qi: walks back from i to the last vertex j where the two
// paths meet after differing, and compares their edges entering j under
// in(j). -1, 0 (identical prefixes) or 1. cmp_out is the mirror image.
int compare_in(const Multigraph& g, const Framing& fr, const Route& r, const Route& q, Vertex i);
int compare_out(const Multigraph& g, const Framing& fr, const Route& r, const Route& q, Vertex i);

// Coherent at every common internal vertex.
bool coherent(const Multigraph& g, const Framing& fr, const Route& r, const Route& q);

// Maximal cliques of the coherence graph on routes (Bron-Kerbosch with
// pivoting), sorted. Requires a unique source and sink.
std::vector<Clique> max_cliques(const Multigraph& g, const Framing& fr);

/// f(e) = n(e) - 1, n(e) the number of distinct prefixes Rj, R in C,
/// whose last edge is e.
///
/// Throws InvariantError if some edge ends no prefix (the clique is not
/// maximal).
IntegerFlow omega(const Multigraph& g, const Clique& c);

// The maximal clique with omega(C) = f, found through an index of all
// maximal cliques. InvariantError if f has no preimage.
Clique omega_inverse(const Multigraph& g, const Framing& fr, const IntegerFlow& f);

// Framing on reverse(g): in and out orders swap, vertex i becomes n+1-i.
Framing reverse_framing(const Multigraph& g, const Framing& fr);

// Every route traversed backwards, as a route of reverse(g).
Clique reverse_clique(const Clique& c);

// omega on reverse(g) of the reversed clique of omega_inverse(f).
IntegerFlow theta(const Multigraph& g, const Framing& fr, const IntegerFlow& f);

// theta on every flow of F_G(0, d_1, ..., d_n, -sum d_i), sorted by the
// domain flow; shares one clique index.
std::vector<std::pair<IntegerFlow, IntegerFlow>> theta_pairs(const Multigraph& g, const Framing& fr);

/// Spanning tree of K_{p,q} attached to a maximal clique of G(p,q): edge
/// (i, j) when C has the route through the i-th (0,1) edge and the j-th
/// (1,2) edge in framing order, both 1-based.
///
/// UsageError unless g is G(p,q) (one internal vertex, edges (0,1) and
/// (1,2) only). InvariantError if the result is not a spanning tree.
std::vector<std::pair<int, int>> clique_to_tree(const Multigraph& g, const Framing& fr, const Clique& c);

}  // namespace flowpoly

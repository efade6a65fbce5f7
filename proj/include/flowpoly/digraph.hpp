#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace flowpoly {

using EdgeId = std::size_t;
using Vertex = int;

struct Edge {
    Vertex tail = 0;
    Vertex head = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loopless acyclic multigraph on {0, ..., n+1} with every edge oriented
/// from the smaller to the larger endpoint.
///
/// An edge's position in `edges()` is its EdgeId; parallel edges are
/// repeated entries. Flows and framings are indexed by EdgeId, so the
/// order of the edge list is part of a graph's identity.
class Multigraph {
public:
    Multigraph() = default;
    // Throws UsageError unless every edge satisfies 0 <= tail < head <= n+1.
    Multigraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int vertex_count() const { return n_ + 2; }
    Vertex source() const { return 0; }
    Vertex sink() const { return n_ + 1; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    int indeg(Vertex v) const;
    int outdeg(Vertex v) const;
    // EdgeIds in increasing order.
    std::vector<EdgeId> in_edges(Vertex v) const;
    std::vector<EdgeId> out_edges(Vertex v) const;

    // True when 0 is the only vertex without in-edges, n+1 the only vertex
    // without out-edges, and the graph has at least one edge.
    bool has_unique_source_and_sink() const;

    std::vector<Edge> sorted_edges() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Edge multisets agree (edge order ignored).
bool same_up_to_reordering(const Multigraph& g, const Multigraph& h);

/// Internal vertices of k_{n+2}^{a,b,c}(S) whose (0,i) multiplicity drops
/// by one and which gain an extra (i,n+1) edge.
using SubsetS = std::set<int>;

// k_{n+2}^{a,b,c}: a copies of (0,i), b copies of (i,n+1), c copies of (i,j)
// for 1 <= i < j <= n. No (0,n+1) edge. Edges are listed in lexicographic
// (tail, head) order. a = 0 is accepted and yields a graph in which vertex 1
// has no in-edges.
Multigraph build_kabc(int n, int a, int b, int c);

// k_{n+2}^{a,b,c}(S): build_kabc plus n copies of (0,n+1), one (0,i)
// traded for an extra (i,n+1) for every i in S.
Multigraph build_kabc_S(int n, int a, int b, int c, const SubsetS& s);

// The complete graph k_{n+2}, including the edge (0,n+1).
Multigraph build_complete(int n);

// Vertices {0,1,2}; p copies of (0,1) followed by q copies of (1,2).
Multigraph build_Gpq(int p, int q);

// Random graph on {0..n+1}, 1 <= n <= 3, with at most max_edges (>= 2)
// edges and a unique source and sink: every internal vertex gets one random
// in-edge and one random out-edge, then extra random edges are added in
// shuffled order. Deterministic in the seed.
Multigraph random_graph(std::uint64_t seed, int max_edges = 9);

// Edge (i,j) becomes (n+1-j, n+1-i); edge k of g stays edge k.
Multigraph reverse(const Multigraph& g);

/// One application of the reduction rule at the pair in_edge = (i,j),
/// out_edge = (j,k).
///
/// `first` replaces out_edge by (i,k) in the same slot; `second` replaces
/// in_edge by (i,k) in the same slot. All other EdgeIds are unchanged.
struct Reduction {
    Multigraph first;
    Multigraph second;
};
Reduction reduce(const Multigraph& g, EdgeId in_edge, EdgeId out_edge);

// Leaves of the reduction tree built by repeatedly reducing at vertices with
// in- and out-degree > 1 (both children kept), then at vertices with
// in-degree 1 and out-degree > 1 (only the child that keeps the in-edge is
// kept, the other has an empty polytope). Stops when every internal vertex
// has out-degree 1. Picks the smallest eligible vertex and the smallest
// (in_edge, out_edge) pair at each step. Throws UsageError unless g has a
// unique source and sink.
std::vector<Multigraph> reduction_leaves(const Multigraph& g);

// Same algorithm, but the vertex and edge pair at each step are chosen
// uniformly at random (seeded). The leaf count must not depend on the seed.
std::vector<Multigraph> reduction_leaves_randomized(const Multigraph& g, std::uint64_t seed);

}  // namespace flowpoly

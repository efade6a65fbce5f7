#include "flowpoly/volumes.hpp"

#include <string>

#include "flowpoly/errors.hpp"

namespace flowpoly {

namespace {

void require_unique_source_sink(const Multigraph& g) {
    if (!g.has_unique_source_and_sink()) {
        throw UsageError("volume needs a graph with unique source 0 and unique sink n+1");
    }
}

struct StepEdges {
    std::int64_t x;
    std::int64_t y;
};

StepEdges check_step(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f) {
    if (in_edge >= g0.edge_count() || out_edge >= g0.edge_count()) throw UsageError("edge id out of range");
    if (g0.edge(in_edge).head != g0.edge(out_edge).tail) {
        throw UsageError("reduction needs edges (i,j),(j,k) sharing the middle vertex");
    }
    if (f.size() != g0.edge_count()) throw UsageError("flow length does not match edge count");
    return {f[in_edge], f[out_edge]};
}

}  // namespace

BigInt volume_via_kpf(const Multigraph& g) {
    require_unique_source_sink(g);
    return kpf(g, indegree_netflow(g));
}

BigInt volume_via_subdivision(const Multigraph& g) {
    return BigInt(reduction_leaves(g).size());
}

IntegerFlow phi1(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f) {
    const auto [x, y] = check_step(g0, in_edge, out_edge, f);
    if (y > x) throw UsageError("phi1 needs f(j,k) <= f(i,j)");
    IntegerFlow out = f;
    out[in_edge] = x - y;
    out[out_edge] = y;
    return out;
}

IntegerFlow phi1_inverse(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f1) {
    check_step(g0, in_edge, out_edge, f1);
    IntegerFlow out = f1;
    out[in_edge] = f1[in_edge] + f1[out_edge];
    out[out_edge] = f1[out_edge];
    return out;
}

IntegerFlow phi2(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f) {
    const auto [x, y] = check_step(g0, in_edge, out_edge, f);
    if (y <= x) throw UsageError("phi2 needs f(j,k) > f(i,j)");
    IntegerFlow out = f;
    out[out_edge] = y - x - 1;
    out[in_edge] = x;
    return out;
}

IntegerFlow phi2_inverse(const Multigraph& g0, EdgeId in_edge, EdgeId out_edge, const IntegerFlow& f2) {
    check_step(g0, in_edge, out_edge, f2);
    IntegerFlow out = f2;
    out[in_edge] = f2[in_edge];
    out[out_edge] = f2[out_edge] + f2[in_edge] + 1;
    return out;
}

BigInt lidskii_volume(const Multigraph& g, const NetFlow& a) {
    check_netflow(g, a);
    const int n = g.n();
    for (Vertex v = 0; v <= n; ++v) {
        if (g.outdeg(v) == 0) throw UsageError("vertex " + std::to_string(v) + " has no outgoing edge");
    }
    for (Vertex v = 1; v <= n + 1; ++v) {
        if (g.indeg(v) == 0) throw UsageError("vertex " + std::to_string(v) + " has no incoming edge");
        if (a[static_cast<std::size_t>(v)] > 0) {
            throw UsageError("net flow must be a supply at 0 and demands elsewhere");
        }
    }
    const auto parts = static_cast<std::size_t>(n + 1);
    const auto total = static_cast<std::int64_t>(g.edge_count()) - n - 1;
    if (total < 0) return 0;

    std::vector<std::int64_t> demand(parts);
    std::vector<std::int64_t> d(parts);
    for (std::size_t i = 0; i < parts; ++i) {
        demand[i] = -a[i + 1];
        d[i] = g.indeg(static_cast<Vertex>(i + 1)) - 1;
    }

    BigInt result = 0;
    std::vector<std::int64_t> j(parts, 0);
    auto visit = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
        if (idx + 1 == parts) {
            j[idx] = left;
            BigInt weight = multinomial(j);
            for (std::size_t i = 0; i < parts && weight != 0; ++i) {
                weight *= boost::multiprecision::pow(BigInt(demand[i]), static_cast<unsigned>(j[i]));
            }
            if (weight == 0) return;
            NetFlow b(parts + 1, 0);
            for (std::size_t i = 0; i < parts; ++i) b[i + 1] = d[i] - j[i];
            result += weight * kpf(g, b);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            j[idx] = x;
            self(self, idx + 1, left - x);
        }
    };
    visit(visit, 0, total);
    return result;
}

}  // namespace flowpoly

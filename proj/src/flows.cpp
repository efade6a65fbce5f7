#include "flowpoly/flows.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "flowpoly/errors.hpp"

namespace flowpoly {

void check_netflow(const Multigraph& g, const NetFlow& a) {
    if (a.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw UsageError("netflow has length " + std::to_string(a.size()) + ", expected " +
                         std::to_string(g.vertex_count()));
    }
    if (std::accumulate(a.begin(), a.end(), std::int64_t{0}) != 0) {
        throw UsageError("netflow entries must sum to zero");
    }
}

NetFlow indegree_netflow(const Multigraph& g) {
    NetFlow a(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t total = 0;
    for (Vertex v = 1; v <= g.n(); ++v) {
        a[static_cast<std::size_t>(v)] = g.indeg(v) - 1;
        total += a[static_cast<std::size_t>(v)];
    }
    a.back() = -total;
    return a;
}

NetFlow unit_netflow(const Multigraph& g) {
    NetFlow a(static_cast<std::size_t>(g.vertex_count()), 0);
    a.front() = 1;
    a.back() = -1;
    return a;
}

NetFlow netflow_of(const Multigraph& g, const IntegerFlow& f) {
    NetFlow a(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        a[static_cast<std::size_t>(g.edge(e).tail)] += f.at(e);
        a[static_cast<std::size_t>(g.edge(e).head)] -= f.at(e);
    }
    return a;
}

bool is_flow(const Multigraph& g, const NetFlow& a, const IntegerFlow& f) {
    if (f.size() != g.edge_count()) return false;
    if (std::any_of(f.begin(), f.end(), [](std::int64_t x) { return x < 0; })) return false;
    return netflow_of(g, f) == a;
}

namespace {

// Out-edges of each vertex grouped by head.
struct HeadGroup {
    Vertex head;
    std::vector<EdgeId> edges;
};

std::vector<std::vector<HeadGroup>> group_out_edges(const Multigraph& g) {
    std::vector<std::vector<HeadGroup>> groups(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto& list = groups[static_cast<std::size_t>(g.edge(e).tail)];
        auto it = std::find_if(list.begin(), list.end(), [&](const HeadGroup& h) { return h.head == g.edge(e).head; });
        if (it == list.end()) list.push_back({g.edge(e).head, {e}});
        else it->edges.push_back(e);
    }
    for (auto& list : groups) {
        std::sort(list.begin(), list.end(), [](const HeadGroup& x, const HeadGroup& y) { return x.head < y.head; });
    }
    return groups;
}

class FlowEnumerator {
public:
    FlowEnumerator(const Multigraph& g, const NetFlow& a)
        : g_(g), a_(a), outs_(static_cast<std::size_t>(g.vertex_count())),
          inflow_(static_cast<std::size_t>(g.vertex_count()), 0), flow_(g.edge_count(), 0) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) outs_[static_cast<std::size_t>(g.edge(e).tail)].push_back(e);
    }

    std::vector<IntegerFlow> run() {
        visit_vertex(0);
        std::sort(result_.begin(), result_.end());
        return std::move(result_);
    }

private:
    void visit_vertex(Vertex v) {
        const auto vi = static_cast<std::size_t>(v);
        if (v == g_.sink()) {
            if (inflow_[vi] == -a_[vi]) result_.push_back(flow_);
            return;
        }
        const std::int64_t out = a_[vi] + inflow_[vi];
        if (out < 0) return;
        distribute(v, 0, out);
    }

    void distribute(Vertex v, std::size_t idx, std::int64_t remaining) {
        const auto& outs = outs_[static_cast<std::size_t>(v)];
        if (idx == outs.size()) {
            if (remaining == 0) visit_vertex(v + 1);
            return;
        }
        const EdgeId e = outs[idx];
        const auto head = static_cast<std::size_t>(g_.edge(e).head);
        const std::int64_t lo = idx + 1 == outs.size() ? remaining : 0;
        for (std::int64_t x = lo; x <= remaining; ++x) {
            flow_[e] = x;
            inflow_[head] += x;
            distribute(v, idx + 1, remaining - x);
            inflow_[head] -= x;
        }
        flow_[e] = 0;
    }

    const Multigraph& g_;
    const NetFlow& a_;
    std::vector<std::vector<EdgeId>> outs_;
    std::vector<std::int64_t> inflow_;
    IntegerFlow flow_;
    std::vector<IntegerFlow> result_;
};

class FlowCounter {
public:
    FlowCounter(const Multigraph& g, const NetFlow& a)
        : g_(g), a_(a), groups_(group_out_edges(g)), memo_(static_cast<std::size_t>(g.vertex_count())) {}

    BigInt run() {
        std::vector<std::int64_t> inflow(static_cast<std::size_t>(g_.vertex_count()), 0);
        return count(0, inflow);
    }

private:
    // inflow[w] for w >= v is the flow already routed into w.
    BigInt count(Vertex v, std::vector<std::int64_t>& inflow) {
        const auto vi = static_cast<std::size_t>(v);
        if (v == g_.sink()) return inflow[vi] == -a_[vi] ? BigInt(1) : BigInt(0);
        const std::int64_t out = a_[vi] + inflow[vi];
        if (out < 0) return 0;

        std::vector<std::int64_t> key(inflow.begin() + static_cast<std::ptrdiff_t>(vi), inflow.end());
        auto& memo = memo_[vi];
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        BigInt total = 0;
        spread(v, 0, out, BigInt(1), inflow, total);
        memo.emplace(std::move(key), total);
        return total;
    }

    void spread(Vertex v, std::size_t idx, std::int64_t remaining, const BigInt& weight,
                std::vector<std::int64_t>& inflow, BigInt& total) {
        const auto& groups = groups_[static_cast<std::size_t>(v)];
        if (idx == groups.size()) {
            if (remaining == 0) total += weight * count(v + 1, inflow);
            return;
        }
        const auto& group = groups[idx];
        const auto head = static_cast<std::size_t>(group.head);
        const auto mult = static_cast<std::int64_t>(group.edges.size());
        const std::int64_t lo = idx + 1 == groups.size() ? remaining : 0;
        for (std::int64_t x = lo; x <= remaining; ++x) {
            inflow[head] += x;
            spread(v, idx + 1, remaining - x, weight * binomial(x + mult - 1, mult - 1), inflow, total);
            inflow[head] -= x;
        }
    }

    const Multigraph& g_;
    const NetFlow& a_;
    std::vector<std::vector<HeadGroup>> groups_;
    std::vector<std::map<std::vector<std::int64_t>, BigInt>> memo_;
};

}  // namespace

std::vector<IntegerFlow> enumerate_flows(const Multigraph& g, const NetFlow& a) {
    check_netflow(g, a);
    return FlowEnumerator(g, a).run();
}

BigInt kpf(const Multigraph& g, const NetFlow& a) {
    check_netflow(g, a);
    return FlowCounter(g, a).run();
}

std::vector<Route> routes(const Multigraph& g) {
    std::vector<std::vector<EdgeId>> outs(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) outs[static_cast<std::size_t>(g.edge(e).tail)].push_back(e);

    std::vector<Route> result;
    Route current;
    auto walk = [&](auto&& self, Vertex v) -> void {
        if (v == g.sink()) {
            result.push_back(current);
            return;
        }
        for (EdgeId e : outs[static_cast<std::size_t>(v)]) {
            current.push_back(e);
            self(self, g.edge(e).head);
            current.pop_back();
        }
    };
    walk(walk, g.source());
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Vertex> route_vertices(const Multigraph& g, const Route& r) {
    std::vector<Vertex> out{g.source()};
    for (EdgeId e : r) out.push_back(g.edge(e).head);
    return out;
}

std::size_t constraint_dimension(const Multigraph& g) {
    RationalMatrix m(static_cast<std::size_t>(g.vertex_count()), std::vector<BigRational>(g.edge_count(), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        m[static_cast<std::size_t>(g.edge(e).tail)][e] = 1;
        m[static_cast<std::size_t>(g.edge(e).head)][e] = -1;
    }
    return g.edge_count() - rank(std::move(m));
}

BigInt ehrhart_volume(const Multigraph& g, const NetFlow& a) {
    check_netflow(g, a);
    if (kpf(g, a) == 0) throw UsageError("flow polytope has no lattice points");
    const std::size_t d = constraint_dimension(g);

    std::vector<BigInt> values;
    for (std::size_t t = 0; t <= d + 1; ++t) {
        NetFlow scaled = a;
        for (auto& x : scaled) x *= static_cast<std::int64_t>(t);
        values.push_back(kpf(g, scaled));
    }
    // Forward differences in place: after k rounds values[k] = Delta^k p(0).
    for (std::size_t k = 1; k <= d + 1; ++k) {
        for (std::size_t i = d + 1; i >= k; --i) values[i] -= values[i - 1];
    }
    if (values[d + 1] != 0) {
        throw InvariantError("lattice-point counts are not a polynomial of degree " + std::to_string(d));
    }
    if (values[d] < 0) throw InvariantError("negative normalized volume");
    return values[d];
}

}  // namespace flowpoly

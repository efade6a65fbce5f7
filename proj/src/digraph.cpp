#include "flowpoly/digraph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "flowpoly/errors.hpp"

namespace flowpoly {

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw UsageError("graph needs n >= 0");
    for (const auto& e : edges_) {
        if (e.tail < 0 || e.head > n + 1 || e.tail >= e.head) {
            throw UsageError("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                             ") is not oriented low->high inside {0.." + std::to_string(n + 1) + "}");
        }
    }
}

int Multigraph::indeg(Vertex v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.head == v; }));
}

int Multigraph::outdeg(Vertex v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.tail == v; }));
}

std::vector<EdgeId> Multigraph::in_edges(Vertex v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e].head == v) out.push_back(e);
    }
    return out;
}

std::vector<EdgeId> Multigraph::out_edges(Vertex v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e].tail == v) out.push_back(e);
    }
    return out;
}

bool Multigraph::has_unique_source_and_sink() const {
    if (edges_.empty()) return false;
    for (Vertex v = 1; v <= n_; ++v) {
        if (indeg(v) == 0 || outdeg(v) == 0) return false;
    }
    return outdeg(0) > 0 && indeg(n_ + 1) > 0;
}

std::vector<Edge> Multigraph::sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

bool same_up_to_reordering(const Multigraph& g, const Multigraph& h) {
    return g.n() == h.n() && g.sorted_edges() == h.sorted_edges();
}

Multigraph build_kabc(int n, int a, int b, int c) {
    if (n < 1) throw UsageError("k^{a,b,c} needs n >= 1");
    if (a < 0 || b < 1 || c < 0) throw UsageError("k^{a,b,c} needs a >= 0, b >= 1, c >= 0");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.insert(edges.end(), static_cast<std::size_t>(a), Edge{0, i});
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.insert(edges.end(), static_cast<std::size_t>(c), Edge{i, j});
        edges.insert(edges.end(), static_cast<std::size_t>(b), Edge{i, n + 1});
    }
    return {n, std::move(edges)};
}

Multigraph build_kabc_S(int n, int a, int b, int c, const SubsetS& s) {
    if (a < 1) throw UsageError("k^{a,b,c}(S) needs a >= 1");
    for (int i : s) {
        if (i < 1 || i > n) throw UsageError("S must be a subset of [1," + std::to_string(n) + "]");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        const int copies = s.contains(i) ? a - 1 : a;
        edges.insert(edges.end(), static_cast<std::size_t>(copies), Edge{0, i});
    }
    edges.insert(edges.end(), static_cast<std::size_t>(n), Edge{0, n + 1});
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.insert(edges.end(), static_cast<std::size_t>(c), Edge{i, j});
        const int copies = s.contains(i) ? b + 1 : b;
        edges.insert(edges.end(), static_cast<std::size_t>(copies), Edge{i, n + 1});
    }
    return {n, std::move(edges)};
}

Multigraph build_complete(int n) {
    if (n < 0) throw UsageError("complete graph needs n >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) edges.push_back({i, j});
    }
    return {n, std::move(edges)};
}

Multigraph build_Gpq(int p, int q) {
    if (p < 1 || q < 1) throw UsageError("G(p,q) needs p, q >= 1");
    std::vector<Edge> edges(static_cast<std::size_t>(p), Edge{0, 1});
    edges.insert(edges.end(), static_cast<std::size_t>(q), Edge{1, 2});
    return {1, std::move(edges)};
}

Multigraph random_graph(std::uint64_t seed, int max_edges) {
    if (max_edges < 2) throw UsageError("need max_edges >= 2");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int n = pick(1, std::min(3, max_edges / 2));
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) {
        edges.push_back({pick(0, v - 1), v});
        edges.push_back({v, pick(v + 1, n + 1)});
    }
    const int target = pick(static_cast<int>(edges.size()), max_edges);
    while (static_cast<int>(edges.size()) < target) {
        const int u = pick(0, n);
        edges.push_back({u, pick(u + 1, n + 1)});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return {n, std::move(edges)};
}


Multigraph reverse(const Multigraph& g) {
    const int top = g.n() + 1;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({top - e.head, top - e.tail});
    return {g.n(), std::move(edges)};
}

Reduction reduce(const Multigraph& g, EdgeId in_edge, EdgeId out_edge) {
    if (in_edge >= g.edge_count() || out_edge >= g.edge_count()) throw UsageError("edge id out of range");
    const Edge first = g.edge(in_edge);
    const Edge second = g.edge(out_edge);
    if (first.head != second.tail) {
        throw UsageError("reduction needs edges (i,j),(j,k) sharing the middle vertex");
    }
    const Edge shortcut{first.tail, second.head};
    auto e1 = g.edges();
    e1[out_edge] = shortcut;
    auto e2 = g.edges();
    e2[in_edge] = shortcut;
    return {Multigraph(g.n(), std::move(e1)), Multigraph(g.n(), std::move(e2))};
}

namespace {

struct Candidate {
    Vertex vertex;
    bool split;  // in-degree > 1: keep both children
};

// Chooses (vertex, in_edge, out_edge) among the eligible candidates.
using Chooser = std::function<std::size_t(std::size_t)>;

std::vector<Multigraph> run_reduction(const Multigraph& root, bool mixed_order, const Chooser& choose) {
    if (!root.has_unique_source_and_sink()) {
        throw UsageError("reduction needs a graph with unique source 0 and unique sink n+1");
    }
    std::vector<Multigraph> leaves;
    std::vector<Multigraph> stack{root};
    while (!stack.empty()) {
        Multigraph g = std::move(stack.back());
        stack.pop_back();

        std::vector<Candidate> splits;
        std::vector<Candidate> trims;
        for (Vertex v = 1; v <= g.n(); ++v) {
            const int in = g.indeg(v);
            if (g.outdeg(v) <= 1) continue;
            if (in > 1) splits.push_back({v, true});
            else if (in == 1) trims.push_back({v, false});
        }
        if (splits.empty() && trims.empty()) {
            leaves.push_back(std::move(g));
            continue;
        }
        std::vector<Candidate> pool;
        if (mixed_order) {
            pool = splits;
            pool.insert(pool.end(), trims.begin(), trims.end());
        } else {
            pool = splits.empty() ? trims : splits;
        }
        const Candidate pick = pool[choose(pool.size())];
        const auto ins = g.in_edges(pick.vertex);
        const auto outs = g.out_edges(pick.vertex);
        const EdgeId in_edge = ins[choose(ins.size())];
        const EdgeId out_edge = outs[choose(outs.size())];
        auto children = reduce(g, in_edge, out_edge);
        if (pick.split) stack.push_back(std::move(children.second));
        stack.push_back(std::move(children.first));
    }
    return leaves;
}

}  // namespace

std::vector<Multigraph> reduction_leaves(const Multigraph& g) {
    return run_reduction(g, false, [](std::size_t) { return std::size_t{0}; });
}

std::vector<Multigraph> reduction_leaves_randomized(const Multigraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_reduction(g, true, [&rng](std::size_t size) {
        return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    });
}

}  // namespace flowpoly

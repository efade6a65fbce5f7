#include "flowpoly/dkk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "flowpoly/errors.hpp"

namespace flowpoly {

namespace {

std::size_t rank_in(const std::vector<EdgeId>& order, EdgeId e) {
    auto it = std::find(order.begin(), order.end(), e);
    if (it == order.end()) throw UsageError("edge missing from framing order");
    return static_cast<std::size_t>(it - order.begin());
}

// Position of vertex v on the route, as the index of the edge leaving v;
// the route's length when v is its last vertex; npos when absent.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t position(const Multigraph& g, const Route& r, Vertex v) {
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (g.edge(r[k]).tail == v) return k;
    }
    if (!r.empty() && g.edge(r.back()).head == v) return r.size();
    return npos;
}

int sign(std::size_t x, std::size_t y) { return x < y ? -1 : (x > y ? 1 : 0); }

}  // namespace

Framing default_framing(const Multigraph& g) {
    Framing fr;
    fr.in_order.resize(static_cast<std::size_t>(g.vertex_count()));
    fr.out_order.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 1; v <= g.n(); ++v) {
        auto ins = g.in_edges(v);
        std::stable_sort(ins.begin(), ins.end(), [&](EdgeId x, EdgeId y) { return g.edge(x).tail < g.edge(y).tail; });
        auto outs = g.out_edges(v);
        std::stable_sort(outs.begin(), outs.end(), [&](EdgeId x, EdgeId y) { return g.edge(x).head < g.edge(y).head; });
        fr.in_order[static_cast<std::size_t>(v)] = std::move(ins);
        fr.out_order[static_cast<std::size_t>(v)] = std::move(outs);
    }
    return fr;
}

Framing shuffled_framing(const Multigraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Framing fr = default_framing(g);
    for (Vertex v = 1; v <= g.n(); ++v) {
        std::shuffle(fr.in_order[static_cast<std::size_t>(v)].begin(), fr.in_order[static_cast<std::size_t>(v)].end(), rng);
        std::shuffle(fr.out_order[static_cast<std::size_t>(v)].begin(), fr.out_order[static_cast<std::size_t>(v)].end(), rng);
    }
    return fr;
}

void check_framing(const Multigraph& g, const Framing& fr) {
    const auto count = static_cast<std::size_t>(g.vertex_count());
    if (fr.in_order.size() != count || fr.out_order.size() != count) {
        throw UsageError("framing must list orders for every vertex");
    }
    auto same_set = [](std::vector<EdgeId> x, std::vector<EdgeId> y) {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    };
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (!same_set(fr.in_order[static_cast<std::size_t>(v)], g.in_edges(v)) ||
            !same_set(fr.out_order[static_cast<std::size_t>(v)], g.out_edges(v))) {
            throw UsageError("framing at vertex " + std::to_string(v) + " is not a permutation of its edges");
        }
    }
}

int compare_in(const Multigraph& g, const Framing& fr, const Route& r, const Route& q, Vertex i) {
    std::size_t pr = position(g, r, i);
    std::size_t pq = position(g, q, i);
    if (pr == npos || pq == npos) throw UsageError("routes do not share the vertex");
    while (pr > 0 && pq > 0) {
        const EdgeId er = r[pr - 1];
        const EdgeId eq = q[pq - 1];
        if (er != eq) {
            const auto& order = fr.in_order.at(static_cast<std::size_t>(g.edge(er).head));
            return sign(rank_in(order, er), rank_in(order, eq));
        }
        --pr;
        --pq;
    }
    return 0;
}

int compare_out(const Multigraph& g, const Framing& fr, const Route& r, const Route& q, Vertex i) {
    std::size_t pr = position(g, r, i);
    std::size_t pq = position(g, q, i);
    if (pr == npos || pq == npos) throw UsageError("routes do not share the vertex");
    while (pr < r.size() && pq < q.size()) {
        const EdgeId er = r[pr];
        const EdgeId eq = q[pq];
        if (er != eq) {
            const auto& order = fr.out_order.at(static_cast<std::size_t>(g.edge(er).tail));
            return sign(rank_in(order, er), rank_in(order, eq));
        }
        ++pr;
        ++pq;
    }
    return 0;
}

bool coherent(const Multigraph& g, const Framing& fr, const Route& r, const Route& q) {
    for (std::size_t k = 1; k < r.size(); ++k) {
        const Vertex i = g.edge(r[k]).tail;
        if (position(g, q, i) == npos) continue;
        const int in = compare_in(g, fr, r, q, i);
        const int out = compare_out(g, fr, r, q, i);
        if (in != 0 && out != 0 && in != out) return false;
    }
    return true;
}

std::vector<Clique> max_cliques(const Multigraph& g, const Framing& fr) {
    if (!g.has_unique_source_and_sink()) throw UsageError("graph needs a unique source and sink");
    check_framing(g, fr);
    const auto all = routes(g);
    const std::size_t m = all.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) adj[x][y] = adj[y][x] = coherent(g, fr, all[x], all[y]);
    }
    std::vector<Clique> out;
    std::vector<std::size_t> current;
    auto bron_kerbosch = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
        if (p.empty() && x.empty()) {
            Clique c;
            for (auto v : current) c.push_back(all[v]);
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* pool : {&p, &x}) {
            for (auto u : *pool) {
                std::size_t deg = 0;
                for (auto v : p) deg += adj[u][v] ? 1 : 0;
                if (deg > best) {
                    best = deg;
                    pivot = u;
                }
            }
        }
        std::vector<std::size_t> candidates;
        for (auto v : p) {
            if (!adj[pivot][v]) candidates.push_back(v);
        }
        for (auto v : candidates) {
            std::vector<std::size_t> np, nx;
            for (auto u : p) {
                if (adj[v][u]) np.push_back(u);
            }
            for (auto u : x) {
                if (adj[v][u]) nx.push_back(u);
            }
            current.push_back(v);
            self(self, np, nx);
            current.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    bron_kerbosch(bron_kerbosch, p, {});
    std::sort(out.begin(), out.end());
    return out;
}

IntegerFlow omega(const Multigraph& g, const Clique& c) {
    std::set<Route> prefixes;
    for (const auto& r : c) {
        for (std::size_t k = 1; k <= r.size(); ++k) prefixes.emplace(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
    }
    std::vector<std::int64_t> count(g.edge_count(), 0);
    for (const auto& p : prefixes) ++count[p.back()];
    IntegerFlow f(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (count[e] == 0) throw InvariantError("edge " + std::to_string(e) + " ends no prefix of the clique");
        f[e] = count[e] - 1;
    }
    return f;
}

namespace {

std::map<IntegerFlow, Clique> clique_index(const Multigraph& g, const Framing& fr) {
    std::map<IntegerFlow, Clique> index;
    for (auto& c : max_cliques(g, fr)) {
        auto f = omega(g, c);
        if (!index.emplace(std::move(f), std::move(c)).second) throw InvariantError("two maximal cliques share a flow");
    }
    return index;
}

}  // namespace

Clique omega_inverse(const Multigraph& g, const Framing& fr, const IntegerFlow& f) {
    const auto index = clique_index(g, fr);
    auto it = index.find(f);
    if (it == index.end()) throw InvariantError("flow has no maximal clique");
    return it->second;
}

Framing reverse_framing(const Multigraph& g, const Framing& fr) {
    check_framing(g, fr);
    Framing out;
    const auto count = static_cast<std::size_t>(g.vertex_count());
    out.in_order.resize(count);
    out.out_order.resize(count);
    for (Vertex v = 1; v <= g.n(); ++v) {
        const auto w = static_cast<std::size_t>(g.n() + 1 - v);
        out.in_order[w] = fr.out_order[static_cast<std::size_t>(v)];
        out.out_order[w] = fr.in_order[static_cast<std::size_t>(v)];
    }
    return out;
}

Clique reverse_clique(const Clique& c) {
    Clique out;
    for (const auto& r : c) out.emplace_back(r.rbegin(), r.rend());
    std::sort(out.begin(), out.end());
    return out;
}

IntegerFlow theta(const Multigraph& g, const Framing& fr, const IntegerFlow& f) {
    return omega(reverse(g), reverse_clique(omega_inverse(g, fr, f)));
}

std::vector<std::pair<IntegerFlow, IntegerFlow>> theta_pairs(const Multigraph& g, const Framing& fr) {
    const auto gr = reverse(g);
    std::vector<std::pair<IntegerFlow, IntegerFlow>> out;
    for (const auto& [f, c] : clique_index(g, fr)) out.emplace_back(f, omega(gr, reverse_clique(c)));
    return out;
}

std::vector<std::pair<int, int>> clique_to_tree(const Multigraph& g, const Framing& fr, const Clique& c) {
    if (g.n() != 1) throw UsageError("clique_to_tree needs a graph G(p,q)");
    for (const auto& e : g.edges()) {
        if (!((e.tail == 0 && e.head == 1) || (e.tail == 1 && e.head == 2))) {
            throw UsageError("clique_to_tree needs a graph G(p,q)");
        }
    }
    check_framing(g, fr);
    const auto& left = fr.in_order[1];
    const auto& right = fr.out_order[1];
    const int p = static_cast<int>(left.size());
    const int q = static_cast<int>(right.size());
    std::vector<std::pair<int, int>> tree;
    for (const auto& r : c) {
        if (r.size() != 2) throw UsageError("route of G(p,q) must have two edges");
        tree.emplace_back(static_cast<int>(rank_in(left, r[0])) + 1, static_cast<int>(rank_in(right, r[1])) + 1);
    }
    std::sort(tree.begin(), tree.end());
    // Union-find over 1..p and p+1..p+q.
    std::vector<int> parent(static_cast<std::size_t>(p + q + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    bool acyclic = true;
    for (const auto& [i, j] : tree) {
        const int x = find(i);
        const int y = find(p + j);
        if (x == y) acyclic = false;
        parent[static_cast<std::size_t>(x)] = y;
    }
    if (!acyclic || static_cast<int>(tree.size()) != p + q - 1) {
        throw InvariantError("clique does not give a spanning tree of K_{p,q}");
    }
    return tree;
}

}  // namespace flowpoly

#include "flowpoly/refine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <optional>
#include <tuple>

#include "flowpoly/errors.hpp"
#include "flowpoly/volumes.hpp"

namespace flowpoly {

namespace {

void check_params(int n, int a, int b, int c) {
    if (n < 1) throw UsageError("need n >= 1");
    if (a < 0 || b < 1 || c < 0) throw UsageError("need a >= 0, b >= 1, c >= 0");
}

std::vector<std::int64_t> bounds(int n, int a, int c) {
    const MorrisParams p{n, a, 1, c, 0};
    std::vector<std::int64_t> top(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) top[static_cast<std::size_t>(i - 1)] = p.bound(i);
    return top;
}

NetFlow close_netflow(const std::vector<std::int64_t>& inner) {
    NetFlow a{0};
    std::int64_t total = 0;
    for (auto x : inner) {
        a.push_back(x);
        total += x;
    }
    a.push_back(-total);
    return a;
}

}  // namespace

BigInt morris_via_kpf(int n, int a, int b, int c) {
    check_params(n, a, b, c);
    return kpf(build_kabc(n, a, b, c), close_netflow(bounds(n, a, c)));
}

std::vector<BigInt> psi_via_kpf_all(int n, int a, int b, int c) {
    check_params(n, a, b, c);
    const auto g = build_kabc(n, a, b, c);
    const auto top = bounds(n, a, c);
    std::vector<BigInt> by_k(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::int64_t> inner(static_cast<std::size_t>(n));
    auto sweep = [&](auto&& self, std::size_t i, std::int64_t reach, int strict) -> void {
        if (i == inner.size()) {
            by_k[static_cast<std::size_t>(strict)] += kpf(g, close_netflow(inner));
            return;
        }
        const std::int64_t next_reach = reach + std::max<std::int64_t>(top[i], 0);
        for (std::int64_t x = -reach; x <= top[i]; ++x) {
            inner[i] = x;
            self(self, i + 1, next_reach, strict + (x < top[i] ? 1 : 0));
        }
    };
    sweep(sweep, 0, 0, 0);
    return by_k;
}

BigInt psi_via_kpf(int n, int k, int a, int b, int c) {
    if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
    return psi_via_kpf_all(n, a, b, c)[static_cast<std::size_t>(k)];
}

BigInt psi_via_volumes(int n, int k, int a, int b, int c) {
    check_params(n, a, b, c);
    if (a < 1) throw UsageError("volume interpretation needs a >= 1");
    if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
    BigInt total = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        SubsetS s;
        for (int i = 1; i <= n; ++i) {
            if ((mask >> (i - 1)) & 1U) s.insert(i);
        }
        const auto g = build_kabc_S(n, a, b, c, s);
        if (g.has_unique_source_and_sink()) total += volume_via_kpf(g);
    }
    return total;
}

BigInt phi_via_kpf(int n, int k, int a, int b, int c) {
    check_params(n, a, b, c);
    if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
    const auto g = build_kabc(n, a, b, c);
    const auto top = bounds(n, a, c);
    BigInt total = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        auto inner = top;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) --inner[static_cast<std::size_t>(i)];
        }
        total += kpf(g, close_netflow(inner));
    }
    return total;
}

std::vector<std::pair<SubsetS, Multigraph>> subdivide_kabc(int n, int a, int b, int c) {
    check_params(n, a, b, c);
    if (a < 1) throw UsageError("subdivision needs a >= 1");
    std::vector<std::pair<SubsetS, Multigraph>> pieces{{SubsetS{}, build_kabc(n, a, b + 1, c)}};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<SubsetS, Multigraph>> next;
        for (auto& [s, g] : pieces) {
            EdgeId in_edge = g.edge_count();
            EdgeId out_edge = g.edge_count();
            for (EdgeId e : g.in_edges(i)) {
                if (g.edge(e).tail == 0) in_edge = e;
            }
            for (EdgeId e : g.out_edges(i)) {
                if (g.edge(e).head == n + 1) out_edge = e;
            }
            auto children = reduce(g, in_edge, out_edge);
            auto with_i = s;
            with_i.insert(i);
            next.emplace_back(s, std::move(children.first));
            next.emplace_back(std::move(with_i), std::move(children.second));
        }
        pieces = std::move(next);
    }
    auto key = [](const SubsetS& s) {
        unsigned mask = 0;
        for (int i : s) mask |= 1U << (i - 1);
        return mask;
    };
    std::sort(pieces.begin(), pieces.end(), [&](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
    return pieces;
}

namespace {

// For each EdgeId of the big graph with tail >= 2, the matching EdgeId of
// the contracted graph; other entries are empty.
std::vector<std::optional<EdgeId>> contraction_map(const Multigraph& big, const Multigraph& small) {
    std::map<Edge, std::vector<EdgeId>> slots;
    for (EdgeId e = 0; e < small.edge_count(); ++e) slots[small.edge(e)].push_back(e);
    std::map<Edge, std::size_t> used;
    std::vector<std::optional<EdgeId>> map(big.edge_count());
    for (EdgeId e = 0; e < big.edge_count(); ++e) {
        const Edge& old = big.edge(e);
        if (old.tail < 2) continue;
        const Edge renamed{old.tail - 1, old.head - 1};
        const std::size_t t = used[renamed]++;
        map[e] = slots.at(renamed).at(t);
    }
    return map;
}

}  // namespace

IntegerFlow contract(int n, int b, int c, const IntegerFlow& f) {
    if (n < 2) throw UsageError("contraction needs n >= 2");
    const auto big = build_kabc(n, 1, b, c);
    const auto small = build_kabc(n - 1, c + 1, b, c);
    if (f.size() != big.edge_count()) throw UsageError("flow length does not match edge count");
    const auto map = contraction_map(big, small);
    IntegerFlow out(small.edge_count(), 0);
    for (EdgeId e = 0; e < big.edge_count(); ++e) {
        if (map[e]) {
            out[*map[e]] = f[e];
        } else if (f[e] != 0) {
            throw UsageError("edge leaving vertex 0 or 1 carries nonzero flow");
        }
    }
    return out;
}

IntegerFlow contract_inverse(int n, int b, int c, const IntegerFlow& f) {
    if (n < 2) throw UsageError("contraction needs n >= 2");
    const auto big = build_kabc(n, 1, b, c);
    const auto small = build_kabc(n - 1, c + 1, b, c);
    if (f.size() != small.edge_count()) throw UsageError("flow length does not match edge count");
    const auto map = contraction_map(big, small);
    IntegerFlow out(big.edge_count(), 0);
    std::vector<bool> hit(small.edge_count(), false);
    for (EdgeId e = 0; e < big.edge_count(); ++e) {
        if (!map[e]) continue;
        out[e] = f[*map[e]];
        hit[*map[e]] = true;
    }
    for (EdgeId e = 0; e < small.edge_count(); ++e) {
        if (!hit[e] && f[e] != 0) throw UsageError("edge leaving the source carries nonzero flow");
    }
    return out;
}

ValueSource enumeration_source() {
    using Key = std::tuple<int, int, int, int>;
    struct Cache {
        std::map<Key, BigInt> morris;
        std::map<Key, std::vector<BigInt>> psi;
        std::map<std::tuple<int, int, int, int, int>, BigInt> phi;
    };
    auto cache = std::make_shared<Cache>();
    ValueSource src;
    src.morris = [cache](int n, int a, int b, int c) {
        const Key key{n, a, b, c};
        auto it = cache->morris.find(key);
        if (it == cache->morris.end()) it = cache->morris.emplace(key, morris_via_kpf(n, a, b, c)).first;
        return BigRational(it->second);
    };
    src.psi = [cache](int n, int k, int a, int b, int c) {
        const Key key{n, a, b, c};
        auto it = cache->psi.find(key);
        if (it == cache->psi.end()) it = cache->psi.emplace(key, psi_via_kpf_all(n, a, b, c)).first;
        if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
        return BigRational(it->second[static_cast<std::size_t>(k)]);
    };
    src.phi_prime = [cache](int n, int k, int a, int b, int c) {
        const std::tuple<int, int, int, int, int> key{n, k, a, b, c};
        auto it = cache->phi.find(key);
        if (it == cache->phi.end()) it = cache->phi.emplace(key, phi_via_kpf(n, k, a, b, c)).first;
        return BigRational(it->second * factorial(k) * factorial(n - k));
    };
    return src;
}

}  // namespace flowpoly

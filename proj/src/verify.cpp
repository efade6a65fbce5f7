#include "flowpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "flowpoly/ctseries.hpp"
#include "flowpoly/dkk.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/formulas.hpp"
#include "flowpoly/refine.hpp"
#include "flowpoly/volumes.hpp"

namespace flowpoly {

Grid parse_grid(const std::string& spec) {
    Grid g;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto at = item.find("<=");
        if (at == std::string::npos) throw UsageError("grid entries look like n<=3, got '" + item + "'");
        const std::string key = item.substr(0, at);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(at + 2), &used);
            if (used != item.size() - at - 2) throw UsageError("bad bound in '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad bound in '" + item + "'");
        }
        if (key == "n") {
            g.n = value;
        } else if (key == "a") {
            g.a = value;
        } else if (key == "b") {
            g.b = value;
        } else if (key == "c") {
            g.c = value;
        } else {
            throw UsageError("unknown grid key '" + key + "'");
        }
    }
    if (g.n < 1 || g.a < 1 || g.b < 1 || g.c < 0) throw UsageError("grid needs n, a, b >= 1 and c >= 0");
    return g;
}

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"relations", "thm14",    "thm16",       "thm62",
                                                "symmetry",  "theta",    "cor-catalan", "asymptotics"};
    return names;
}

namespace {

std::string params_of(int n, int a, int b, int c, int k = -1) {
    std::string s = "n=" + std::to_string(n);
    if (k >= 0) s += ",k=" + std::to_string(k);
    return s + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" + std::to_string(c);
}

class Sink {
public:
    explicit Sink(SuiteReport& r) : r_(r) {}

    void equal(const std::string& name, const std::string& params, const BigRational& lhs, const BigRational& rhs) {
        r_.checks.push_back({name, params, to_string(lhs), to_string(rhs), lhs == rhs});
    }
    void equal(const std::string& name, const std::string& params, const BigInt& lhs, const BigInt& rhs) {
        r_.checks.push_back({name, params, to_string(lhs), to_string(rhs), lhs == rhs});
    }
    void holds(const std::string& name, const std::string& params, bool ok, const std::string& detail = "") {
        r_.checks.push_back({name, params, detail, ok ? detail : "", ok});
    }

private:
    SuiteReport& r_;
};

template <typename F>
void for_grid(const Grid& g, F&& f) {
    for (int n = 1; n <= g.n; ++n) {
        for (int a = 1; a <= g.a; ++a) {
            for (int b = 1; b <= g.b; ++b) {
                for (int c = 0; c <= g.c; ++c) f(n, a, b, c);
            }
        }
    }
}

void relations_suite(SuiteReport& r) {
    const auto src = enumeration_source();
    for_grid(r.grid, [&](int n, int a, int b, int c) {
        for (auto& rel : check_relations(n, a, b, c, src)) {
            r.checks.push_back({rel.relation, rel.params, to_string(rel.lhs), to_string(rel.rhs), rel.pass});
        }
    });
}

void thm14_suite(SuiteReport& r) {
    Sink s(r);
    for_grid(r.grid, [&](int n, int a, int b, int c) {
        const auto p = params_of(n, a, b, c);
        const BigRational closed = morris(n, a, b, c);
        s.equal("morris=kpf", p, closed, BigRational(morris_via_kpf(n, a, b, c)));
        s.equal("morris=volume", p, closed, BigRational(volume_via_kpf(build_kabc(n, a, b, c))));
        if (n <= 3) s.equal("morris=constant_term", p, closed, BigRational(ct_morris(n, a, b, c)));
    });
}

void thm16_suite(SuiteReport& r) {
    Sink s(r);
    s.equal("psi_spot_value", params_of(2, 2, 1, 1, 1), psi_via_kpf(2, 1, 2, 1, 1), BigInt(6));
    s.equal("psi_spot_value", params_of(2, 1, 2, 1, 1), psi_via_kpf(2, 1, 1, 2, 1), BigInt(1));
    for_grid(r.grid, [&](int n, int a, int b, int c) {
        const auto all = psi_via_kpf_all(n, a, b, c);
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k) {
            const auto p = params_of(n, a, b, c, k);
            const BigInt& kpf_value = all[static_cast<std::size_t>(k)];
            const BigRational closed = psi_product(n, k, a, b, c);
            s.equal("psi_product=kpf", p, closed, BigRational(kpf_value));
            s.equal("psi_kpf=volumes", p, kpf_value, psi_via_volumes(n, k, a, b, c));
            if (n <= 3) s.equal("psi_kpf=constant_term", p, kpf_value, ct_psi(n, k, a, b, c));
            sum += kpf_value;
        }
        s.equal("refinement_sum", params_of(n, a, b, c), sum, morris_via_kpf(n, a, b + 1, c));
    });
}

void thm62_suite(SuiteReport& r) {
    Sink s(r);
    for_grid(r.grid, [&](int n, int a, int b, int c) {
        for (int k = 0; k <= n; ++k) {
            const auto p = params_of(n, a, b, c, k);
            const BigInt enumerated = phi_via_kpf(n, k, a, b, c);
            s.equal("phi_scaled=kpf", p, phi_scaled(n, k, a, b, c), BigRational(enumerated));
            s.equal("phi_product=scaled_kpf", p, phi_product(n, k, a, b, c),
                    BigRational(enumerated * factorial(k) * factorial(n - k)));
            if (n <= 3) s.equal("phi_kpf=constant_term", p, enumerated, ct_phi(n, k, a, b, c));
        }
        for (auto& rel : check_relations(n, a, b, c, closed_form_source())) {
            if (rel.relation.rfind("phi_", 0) != 0) continue;
            r.checks.push_back({rel.relation, rel.params, to_string(rel.lhs), to_string(rel.rhs), rel.pass});
        }
    });
}

// theta between the flow sets of g and reverse(g) is a bijection.
bool theta_is_bijection(const Multigraph& g, const Framing& fr) {
    const auto domain = enumerate_flows(g, indegree_netflow(g));
    const auto gr = reverse(g);
    const auto codomain = enumerate_flows(gr, indegree_netflow(gr));
    std::set<IntegerFlow> seen_domain, seen_image;
    for (const auto& [f, t] : theta_pairs(g, fr)) {
        seen_domain.insert(f);
        seen_image.insert(t);
    }
    return seen_domain == std::set<IntegerFlow>(domain.begin(), domain.end()) &&
           seen_image == std::set<IntegerFlow>(codomain.begin(), codomain.end()) &&
           domain.size() == codomain.size();
}

void symmetry_suite(SuiteReport& r) {
    Sink s(r);
    for_grid(r.grid, [&](int n, int a, int b, int c) {
        const auto p = params_of(n, a, b, c);
        s.equal("morris_swap_ab", p, morris(n, a, b, c), morris(n, b, a, c));
        const auto g = build_kabc(n, a, b, c);
        const auto h = build_kabc(n, b, a, c);
        s.holds("reverse_is_swapped_family", p, same_up_to_reordering(reverse(g), h));
        s.equal("kpf_swap_ab", p, kpf(g, indegree_netflow(g)), kpf(h, indegree_netflow(h)));
        if (n == 2 && a <= 2 && b <= 2 && c <= 2) {
            s.holds("theta_bijection", p, theta_is_bijection(g, default_framing(g)));
        }
    });
}

void theta_suite(SuiteReport& r) {
    Sink s(r);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_graph(seed);
        const auto vol = volume_via_kpf(g);
        const auto flows = enumerate_flows(g, indegree_netflow(g));
        const std::set<IntegerFlow> flow_set(flows.begin(), flows.end());
        for (std::uint64_t f = 0; f < 3; ++f) {
            const auto fr = f == 0 ? default_framing(g) : shuffled_framing(g, 1000 * seed + f);
            const std::string p = "seed=" + std::to_string(seed) + ",framing=" + std::to_string(f);
            const auto cliques = max_cliques(g, fr);
            s.equal("cliques=volume", p, BigInt(cliques.size()), vol);
            std::set<IntegerFlow> images;
            bool sizes = true;
            for (const auto& c : cliques) {
                sizes = sizes && c.size() == g.edge_count() - static_cast<std::size_t>(g.n());
                images.insert(omega(g, c));
            }
            s.holds("clique_size", p, sizes);
            s.holds("omega_bijective", p, images == flow_set && images.size() == cliques.size());
            s.holds("theta_bijection", p, theta_is_bijection(g, fr));
        }
    }
    for (int pp = 1; pp <= 4; ++pp) {
        for (int q = 1; q <= 4; ++q) {
            const auto g = build_Gpq(pp, q);
            const auto fr = default_framing(g);
            const std::string p = "p=" + std::to_string(pp) + ",q=" + std::to_string(q);
            const auto gr = reverse(g);
            s.equal("lattice_points", p, kpf(g, indegree_netflow(g)), binomial(pp + q - 2, pp - 1));
            s.equal("reverse_lattice_points", p, kpf(gr, indegree_netflow(gr)), binomial(pp + q - 2, q - 1));
            bool agree = true;
            for (const auto& c : max_cliques(g, fr)) {
                const auto tree = clique_to_tree(g, fr, c);
                std::vector<std::int64_t> left(static_cast<std::size_t>(pp), 0), right(static_cast<std::size_t>(q), 0);
                for (const auto& [i, j] : tree) {
                    ++left[static_cast<std::size_t>(i - 1)];
                    ++right[static_cast<std::size_t>(j - 1)];
                }
                const auto f = omega(g, c);
                const auto t = theta(g, fr, f);
                for (int j = 0; j < q; ++j) agree = agree && f[fr.out_order[1][static_cast<std::size_t>(j)]] == right[static_cast<std::size_t>(j)] - 1;
                for (int i = 0; i < pp; ++i) agree = agree && t[fr.in_order[1][static_cast<std::size_t>(i)]] == left[static_cast<std::size_t>(i)] - 1;
            }
            s.holds("theta=tree_degree_swap", p, agree);
        }
    }
}

void catalan_suite(SuiteReport& r) {
    Sink s(r);
    for (int n = 2; n <= 5; ++n) {
        const auto g = build_complete(n);
        const auto p = "n=" + std::to_string(n);
        const BigInt expected = catalan_product(n);
        s.equal("cry_volume_kpf", p, volume_via_kpf(g), expected);
        if (n <= 4) {
            s.equal("cry_volume_subdivision", p, volume_via_subdivision(g), expected);
            s.equal("cry_volume_cliques", p, BigInt(max_cliques(g, default_framing(g)).size()), expected);
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            s.equal("narayana_refinement", params_of(n, 1, 1, 1, k), psi_via_kpf(n, k, 1, 1, 1),
                    narayana(n, k + 1) * catalan_product(n));
        }
    }
    auto special = [&](const std::string& name, const MorrisParams& mp) {
        s.equal("special_" + name, params_of(mp.n, mp.a, mp.b, mp.c), morris_special(name, mp),
                morris(mp.n, mp.a, mp.b, mp.c));
    };
    for (int n = 1; n <= 6; ++n) {
        for (int a = 1; a <= 4; ++a) {
            special("a11", {n, a, 1, 1, 0});
            if (n <= 5) special("a11-det", {n, a, 1, 1, 0});
            for (int b = 1; b <= 4; ++b) {
                special("ab1", {n, a, b, 1, 0});
                for (int c = 2; c <= 4; c += 2) special("ab2k", {n, a, b, c, 0});
            }
        }
        for (int c = 2; c <= 6; c += 2) special("m11c_even", {n, 1, 1, c, 0});
        for (int c = 1; c <= 7; c += 2) special("m11c_odd", {n, 1, 1, c, 0});
        for (int k = 0; k <= n; ++k) {
            auto psi_case = [&](const std::string& name, int a, int b, int c) {
                s.equal("special_" + name, params_of(n, a, b, c, k), psi_special(name, {n, a, b, c, k}),
                        psi_product(n, k, a, b, c));
            };
            for (int x = 1; x <= 4; ++x) {
                psi_case("ka11", x, 1, 1);
                psi_case("k1b1", 1, x, 1);
            }
            for (int c = 0; c <= 4; ++c) psi_case("k11c", 1, 1, c);
            psi_case("narayana", 1, 1, 1);
        }
    }
}

void asymptotics_suite(SuiteReport& r) {
    Sink s(r);
    std::vector<double> normalized;
    for (int n : {10, 20, 40, 60}) {
        const auto pt = asymptotic_log_morris(AsymptoticCase::m111, n);
        const double residual = std::abs(pt.exact - pt.predicted);
        normalized.push_back(residual / (static_cast<double>(n) * n));
        s.holds("m111_residual_over_n_bounded", "n=" + std::to_string(n), residual / n < 0.25,
                std::to_string(residual / n));
        r.observations.push_back({{"case", "m111"}, {"n", n}, {"log_exact", pt.exact}, {"log_predicted", pt.predicted},
                                  {"residual_over_n2", normalized.back()}});
    }
    s.holds("m111_normalized_residual_decreasing", "n=20,40,60",
            normalized[1] > normalized[2] && normalized[2] > normalized[3]);
    s.holds("m111_normalized_residual_last_below_first", "n=10,60", normalized[3] < normalized[0]);
    double previous = 1.0;
    bool decreasing = true;
    for (int n : {10, 20, 40}) {
        const auto pt = asymptotic_log_morris(AsymptoticCase::mn11, n);
        const double relative = std::abs(pt.exact - pt.predicted) / pt.predicted;
        decreasing = decreasing && relative < previous;
        previous = relative;
        r.observations.push_back({{"case", "mn11"}, {"n", n}, {"log_exact", pt.exact}, {"log_predicted", pt.predicted},
                                  {"relative_error", relative}});
    }
    s.holds("mn11_relative_error_decreasing", "n=10,20,40", decreasing);
    s.holds("mn11_relative_error_below_quarter", "n=40", previous < 0.25, std::to_string(previous));
    for (int n : {10, 20, 40, 80}) {
        const auto pt = asymptotic_log_morris(AsymptoticCase::mnn1, n);
        r.observations.push_back({{"case", "mnn1"}, {"n", n}, {"log_exact", pt.exact}, {"log_predicted", pt.predicted},
                                  {"log_exact_over_n2", pt.exact / (static_cast<double>(n) * n)}});
    }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const Grid& grid) {
    SuiteReport r;
    r.suite = suite;
    r.grid = grid;
    if (suite == "relations") {
        relations_suite(r);
    } else if (suite == "thm14") {
        thm14_suite(r);
    } else if (suite == "thm16") {
        thm16_suite(r);
    } else if (suite == "thm62") {
        thm62_suite(r);
    } else if (suite == "symmetry") {
        symmetry_suite(r);
    } else if (suite == "theta") {
        theta_suite(r);
    } else if (suite == "cor-catalan") {
        catalan_suite(r);
    } else if (suite == "asymptotics") {
        asymptotics_suite(r);
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    return r;
}

nlohmann::json report_to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
        failed += c.pass ? 0 : 1;
    }
    nlohmann::json out{{"suite", r.suite},
                       {"grid", {{"n", r.grid.n}, {"a", r.grid.a}, {"b", r.grid.b}, {"c", r.grid.c}}},
                       {"pass", r.pass()},
                       {"total", r.checks.size()},
                       {"failed", failed},
                       {"checks", checks}};
    if (!r.observations.empty()) out["observations"] = r.observations;
    return out;
}

}  // namespace flowpoly

#include "flowpoly/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowpoly/ctseries.hpp"
#include "flowpoly/dkk.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/formulas.hpp"
#include "flowpoly/refine.hpp"
#include "flowpoly/serialize.hpp"
#include "flowpoly/verify.hpp"
#include "flowpoly/volumes.hpp"

namespace flowpoly {

namespace {

using nlohmann::json;

struct Options {
    std::string graph;
    std::string netflow;
    std::string framing;
    std::string method;
    std::string suite;
    std::string grid;
    std::string map;
    bool list = false;
    bool pretty = false;
    bool as_json = false;
    int n = 1;
    int a = 1;
    int b = 1;
    int c = 0;
    int k = 0;
};

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

Framing load_framing(const Multigraph& g, const std::string& path) {
    return path.empty() ? default_framing(g) : framing_from_json(g, read_json_file(path));
}

std::optional<std::string> special_case(const std::string& method) {
    const std::string prefix = "special:";
    if (method.rfind(prefix, 0) == 0) return method.substr(prefix.size());
    return std::nullopt;
}

BigRational value_of(const std::string& family, const Options& o) {
    const MorrisParams p{o.n, o.a, o.b, o.c, o.k};
    const auto& m = o.method;
    if (family == "morris") {
        if (m == "formula") return morris(o.n, o.a, o.b, o.c);
        if (m == "kpf") return BigRational(morris_via_kpf(o.n, o.a, o.b, o.c));
        if (m == "volumes") return BigRational(volume_via_kpf(build_kabc(o.n, o.a, o.b, o.c)));
        if (m == "ct") return BigRational(ct_morris(o.n, o.a, o.b, o.c));
        if (auto name = special_case(m)) return morris_special(*name, p);
    } else if (family == "psi") {
        if (m == "formula") return psi_product(o.n, o.k, o.a, o.b, o.c);
        if (m == "kpf") return BigRational(psi_via_kpf(o.n, o.k, o.a, o.b, o.c));
        if (m == "volumes") return BigRational(psi_via_volumes(o.n, o.k, o.a, o.b, o.c));
        if (m == "ct") return BigRational(ct_psi(o.n, o.k, o.a, o.b, o.c));
        if (auto name = special_case(m)) return psi_special(*name, p);
    } else {
        if (m == "formula") return phi_scaled(o.n, o.k, o.a, o.b, o.c);
        if (m == "kpf") return BigRational(phi_via_kpf(o.n, o.k, o.a, o.b, o.c));
        if (m == "ct") return BigRational(ct_phi(o.n, o.k, o.a, o.b, o.c));
    }
    throw UsageError("method '" + m + "' is not available for " + family);
}

BigInt volume_of(const Multigraph& g, const Options& o) {
    const auto& m = o.method;
    if (m == "kpf") return volume_via_kpf(g);
    if (m == "subdivision") return volume_via_subdivision(g);
    if (m == "ehrhart") return ehrhart_volume(g, unit_netflow(g));
    if (m == "lidskii") return lidskii_volume(g, unit_netflow(g));
    if (m == "dkk") return BigInt(max_cliques(g, load_framing(g, o.framing)).size());
    throw UsageError("unknown volume method '" + m + "'");
}

int dispatch(CLI::App& app, Options o, std::ostream& out) {
    auto* used = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (used == nullptr) throw UsageError("a subcommand is required; see --help");
    const std::string cmd = used->get_name();
    if (o.method.empty()) o.method = cmd == "volume" ? "kpf" : "formula";

    if (cmd == "kpf") {
        const auto g = parse_graph_spec(o.graph);
        const NetFlow a = o.netflow.empty() ? indegree_netflow(g) : parse_int_list(o.netflow);
        if (!o.list) {
            out << to_string(kpf(g, a)) << '\n';
            return 0;
        }
        const auto flows = enumerate_flows(g, a);
        emit(out, {{"count", flows.size()}, {"netflow", a}, {"flows", flows}}, o.pretty);
        return 0;
    }
    if (cmd == "volume") {
        const auto v = volume_of(parse_graph_spec(o.graph), o);
        if (o.as_json) {
            emit(out, {{"method", o.method}, {"volume", to_string(v)}}, o.pretty);
        } else {
            out << to_string(v) << '\n';
        }
        return 0;
    }
    if (cmd == "morris" || cmd == "psi" || cmd == "phi") {
        const auto v = value_of(cmd, o);
        if (o.as_json) {
            json j{{"quantity", cmd}, {"method", o.method}, {"n", o.n}, {"a", o.a}, {"b", o.b}, {"c", o.c}};
            if (cmd != "morris") j["k"] = o.k;
            j["value"] = to_string(v);
            emit(out, j, o.pretty);
        } else {
            out << to_string(v) << '\n';
        }
        return 0;
    }
    if (cmd == "verify") {
        const auto report = run_suite(o.suite, parse_grid(o.grid));
        emit(out, report_to_json(report), o.pretty);
        return report.pass() ? 0 : 1;
    }
    if (cmd == "triangulate") {
        const auto g = parse_graph_spec(o.graph);
        const auto fr = load_framing(g, o.framing);
        json cliques = json::array();
        for (const auto& c : max_cliques(g, fr)) cliques.push_back(clique_to_json(c));
        emit(out, {{"graph", graph_to_json(g)}, {"framing", framing_to_json(fr)}, {"count", cliques.size()},
                   {"cliques", cliques}},
             o.pretty);
        return 0;
    }
    if (cmd == "bijection") {
        if (o.map != "theta") throw UsageError("unknown bijection '" + o.map + "'");
        const auto g = parse_graph_spec(o.graph);
        const auto fr = load_framing(g, o.framing);
        json pairs = json::array();
        for (const auto& [f, t] : theta_pairs(g, fr)) pairs.push_back({{"flow", f}, {"image", t}});
        emit(out, {{"graph", graph_to_json(g)}, {"reverse", graph_to_json(reverse(g))}, {"count", pairs.size()},
                   {"pairs", pairs}},
             o.pretty);
        return 0;
    }
    throw UsageError("unknown subcommand '" + cmd + "'");
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flow polytopes, Kostant partition functions and the Morris constant term"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "indent JSON output");

    auto* kpf_cmd = app.add_subcommand("kpf", "count integer flows");
    kpf_cmd->add_option("--graph", o.graph, "builder spec or @file.json")->required();
    kpf_cmd->add_option("--netflow", o.netflow, "comma-separated net flow (default: in-degree net flow)");
    kpf_cmd->add_flag("--list", o.list, "list the flows as JSON");

    auto* vol_cmd = app.add_subcommand("volume", "normalized volume of F_G");
    vol_cmd->add_option("--graph", o.graph, "builder spec or @file.json")->required();
    vol_cmd->add_option("--method", o.method, "kpf (default), subdivision, ehrhart, lidskii or dkk");
    vol_cmd->add_option("--framing", o.framing, "framing JSON file for --method dkk");
    vol_cmd->add_flag("--json", o.as_json, "print a JSON object");

    for (const char* name : {"morris", "psi", "phi"}) {
        auto* cmd = app.add_subcommand(name, std::string("exact value of ") + name);
        cmd->add_option("--n", o.n)->required();
        cmd->add_option("--a", o.a)->required();
        cmd->add_option("--b", o.b)->required();
        cmd->add_option("--c", o.c)->required();
        if (std::string(name) != "morris") cmd->add_option("--k", o.k)->default_val(0);
        cmd->add_option("--method", o.method, "formula (default), kpf, volumes, ct or special:<case>");
        cmd->add_flag("--json", o.as_json, "print a JSON object");
    }

    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite and print a JSON report");
    verify_cmd->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--grid", o.grid, "bounds like n<=3,a<=3,b<=3,c<=2")->default_val("");

    auto* tri_cmd = app.add_subcommand("triangulate", "maximal cliques of a framed graph");
    tri_cmd->add_option("--graph", o.graph)->required();
    tri_cmd->add_option("--framing", o.framing, "framing JSON file (default: by endpoint, then EdgeId)");

    auto* bij_cmd = app.add_subcommand("bijection", "flow bijections between G and its reverse");
    bij_cmd->add_option("map", o.map, "theta")->required();
    bij_cmd->add_option("--graph", o.graph)->required();
    bij_cmd->add_option("--framing", o.framing);

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--pretty", o.pretty, "indent JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what());
        return 2;
    }

    try {
        return dispatch(app, o, out);
    } catch (const UsageError& e) {
        emit_error(err, "usage", e.what());
        return 2;
    } catch (const InvariantError& e) {
        emit_error(err, "invariant", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error(err, "internal", e.what());
        return 3;
    }
}

}  // namespace flowpoly

#include "flowpoly/serialize.hpp"

#include <fstream>
#include <sstream>

#include "flowpoly/errors.hpp"

namespace flowpoly {

nlohmann::json graph_to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.tail, e.head});
    return {{"n", g.n()}, {"edges", edges}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw UsageError("each edge must be a [tail, head] pair");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return {j.at("n").get<int>(), std::move(edges)};
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("bad graph JSON: ") + ex.what());
    }
}

nlohmann::json framing_to_json(const Framing& fr) {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < fr.in_order.size(); ++v) {
        if (fr.in_order[v].empty() && fr.out_order[v].empty()) continue;
        vertices.push_back({{"vertex", v}, {"in", fr.in_order[v]}, {"out", fr.out_order[v]}});
    }
    return {{"vertices", vertices}};
}

Framing framing_from_json(const Multigraph& g, const nlohmann::json& j) {
    Framing fr = default_framing(g);
    try {
        for (const auto& entry : j.at("vertices")) {
            const int v = entry.at("vertex").get<int>();
            if (v < 1 || v > g.n()) throw UsageError("framing names a vertex that is not internal");
            fr.in_order[static_cast<std::size_t>(v)] = entry.at("in").get<std::vector<EdgeId>>();
            fr.out_order[static_cast<std::size_t>(v)] = entry.at("out").get<std::vector<EdgeId>>();
        }
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("bad framing JSON: ") + ex.what());
    }
    check_framing(g, fr);
    return fr;
}

nlohmann::json clique_to_json(const Clique& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : c) out.push_back(r);
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw UsageError("not an integer: '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("not an integer: '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError("cannot parse " + path + ": " + ex.what());
    }
}

Multigraph parse_graph_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return graph_from_json(read_json_file(spec.substr(1)));
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("graph spec needs the form kind:args, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    auto expect = [&](const std::vector<std::int64_t>& v, std::size_t count) {
        if (v.size() != count) throw UsageError(kind + " takes " + std::to_string(count) + " arguments");
        return v;
    };
    auto as_int = [](std::int64_t x) { return static_cast<int>(x); };
    if (kind == "kabc") {
        const auto v = expect(parse_int_list(args), 4);
        return build_kabc(as_int(v[0]), as_int(v[1]), as_int(v[2]), as_int(v[3]));
    }
    if (kind == "kabcS") {
        const auto at = args.find(",S=");
        if (at == std::string::npos) throw UsageError("kabcS needs n,a,b,c,S=i|j|...");
        const auto v = expect(parse_int_list(args.substr(0, at)), 4);
        SubsetS s;
        std::stringstream ss(args.substr(at + 3));
        std::string item;
        while (std::getline(ss, item, '|')) {
            if (!item.empty()) s.insert(as_int(parse_int_list(item).at(0)));
        }
        return build_kabc_S(as_int(v[0]), as_int(v[1]), as_int(v[2]), as_int(v[3]), s);
    }
    if (kind == "gpq") {
        const auto v = expect(parse_int_list(args), 2);
        return build_Gpq(as_int(v[0]), as_int(v[1]));
    }
    if (kind == "complete") {
        const auto v = expect(parse_int_list(args), 1);
        return build_complete(as_int(v[0]));
    }
    throw UsageError("unknown graph kind '" + kind + "'");
}

}  // namespace flowpoly

#ifndef LSS_JSON_IO_HPP
#define LSS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lss/decomp.hpp"
#include "lss/gbasis.hpp"
#include "lss/graph.hpp"
#include "lss/groebner.hpp"
#include "lss/variety.hpp"

namespace lss {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph JSON: expected {\"n\": int, \"edges\": [[i,j],...]}");
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: bad edge entry");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw InputError("graph JSON: edge out of range");
        g.add_edge(a, b);
    }
    return g;
}

inline Json ideal_to_json(const Ideal& ideal) {
    if (ideal.ring->aux_count() != 0)
        throw std::invalid_argument("ideal_to_json: only graph-variable rings are serialized");
    Json j;
    j["ring"] = {{"n", ideal.ring->vertex_count()}, {"field", ideal.ring->field().to_string()}};
    Json gens = Json::array();
    for (const auto& p : ideal.gens) gens.push_back(p.to_string());
    j["gens"] = std::move(gens);
    return j;
}

inline Ideal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("gens"))
        throw InputError("ideal JSON: expected {\"ring\": {...}, \"gens\": [...]}");
    const Json& r = j.at("ring");
    int n = r.at("n").get<int>();
    FieldSpec field = FieldSpec::parse(r.at("field").get<std::string>());
    RingPtr ring = make_ring(n, field);
    Ideal ideal{ring, {}};
    for (const auto& s : j.at("gens"))
        ideal.gens.push_back(Polynomial::parse(ring, s.get<std::string>()));
    return ideal;
}

inline Json reduced_gb_to_json(const ReducedGB& gb, const RingPtr& ring) {
    Json j;
    j["ring"] = {{"n", ring->vertex_count()}, {"field", ring->field().to_string()}};
    Json names = Json::array();
    for (int idx : gb.order.priority) names.push_back(ring->var_name(idx));
    j["order"] = std::move(names);
    Json basis = Json::array();
    for (const auto& p : gb.basis) basis.push_back(p.to_string());
    j["basis"] = std::move(basis);
    return j;
}

inline Json gb_element_to_json(const GBElement& e) {
    Json j;
    j["kind"] = to_string(e.kind);
    Json wit = Json::array();
    for (const auto& path : e.witnesses) wit.push_back(path);
    j["witnesses"] = std::move(wit);
    j["poly"] = e.poly.to_string();
    return j;
}

inline Json component_to_json(const ComponentData& c) {
    Json j;
    j["vertices"] = c.vertices;
    j["bipartite"] = c.is_bipartite;
    if (c.is_bipartite) j["blocks"] = Json::array({c.blocks[0], c.blocks[1]});
    return j;
}

inline Json prime_component_to_json(const PrimeComponent& pc) {
    Json j;
    j["S"] = pc.S;
    j["height"] = pc.height();
    Json comps = Json::array();
    for (const auto& c : pc.comps) comps.push_back(component_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

inline Json report_to_json(const DecompositionReport& r, const Graph& g) {
    Json j;
    j["graph"] = graph_to_json(g);
    j["field"] = r.field.to_string();
    j["b"] = r.b;
    j["hypothesis"] = r.hypothesis;
    j["hypothesis_violated"] = r.hypothesis_violated;
    if (r.hypothesis_violated) {
        j["minimal_primes"] = nullptr;
        j["dim"] = nullptr;
        j["unmixed"] = nullptr;
        j["prime"] = nullptr;
    } else {
        Json primes = Json::array();
        for (const auto& pc : r.minimal_primes) primes.push_back(prime_component_to_json(pc));
        j["minimal_primes"] = std::move(primes);
        j["dim"] = r.dim;
        j["unmixed"] = r.unmixed;
        j["prime"] = r.prime;
    }
    j["radical"] = {{"value", r.radical}, {"hypothesis", r.radical_reason}};
    if (r.verified.has_value()) j["verified"] = *r.verified;
    return j;
}

inline Json sample_to_json(const RepresentationSample& s) {
    Json j;
    j["S"] = s.S;
    Json assign = Json::object();
    for (const auto& [v, xy] : s.assignment)
        assign[std::to_string(v)] = Json::array({xy.first.to_string(), xy.second.to_string()});
    j["assignment"] = std::move(assign);
    return j;
}

/// Graph source resolution shared by the CLI: a preset name, an inline JSON
/// object, or a path to a JSON file.
inline Graph load_graph(const std::string& source) {
    if (!source.empty() && source[0] == '{') {
        Json j = Json::parse(source, nullptr, false);
        if (j.is_discarded()) throw InputError("graph: invalid inline JSON");
        return graph_from_json(j);
    }
    try {
        return Graph::preset(source);
    } catch (const std::invalid_argument&) {
        // fall through to file lookup
    }
    std::FILE* fp = std::fopen(source.c_str(), "rb");
    if (!fp) throw InputError("graph: unknown preset and unreadable file '" + source + "'");
    std::string data;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, fp)) > 0) data.append(buf, got);
    std::fclose(fp);
    Json j = Json::parse(data, nullptr, false);
    if (j.is_discarded()) throw InputError("graph: file '" + source + "' is not valid JSON");
    return graph_from_json(j);
}

}  // namespace lss

#endif

#pragma once

// Decorated dual graphs: the resolution tree T (root, delta nodes,
// separation nodes, strings, arrows) and the surface graph G0 (L-nodes,
// P-nodes, arrows, multi-edges), with deterministic DOT and JSON emission.
// Arrows are counts on vertices; DOT renders them as pseudo-vertices.

#include "sislne/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace sislne {

enum class VertexKind { Root, DeltaNode, SeparationNode, StringVertex, LNode, PNode };

inline const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::Root: return "root";
        case VertexKind::DeltaNode: return "deltaNode";
        case VertexKind::SeparationNode: return "separationNode";
        case VertexKind::StringVertex: return "stringVertex";
        case VertexKind::LNode: return "LNode";
        default: return "PNode";
    }
}

inline VertexKind vertex_kind_from(const std::string& s) {
    for (VertexKind k : {VertexKind::Root, VertexKind::DeltaNode, VertexKind::SeparationNode,
                         VertexKind::StringVertex, VertexKind::LNode, VertexKind::PNode})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown vertex kind: " + s);
}

struct GraphVertex {
    std::string id;
    VertexKind kind = VertexKind::StringVertex;
    int euler_weight = 0;
    long long m = 1;                   // multiplicity of a generic linear form
    std::optional<Rational> q;         // inner rate (T vertices)
    std::optional<long long> genus;    // L-nodes
    std::optional<int> component_degree; // L-nodes: degree of the carried component
    int arrows = 0;
    std::optional<bool> in_t_prime;    // T vertices only

    bool operator==(const GraphVertex& o) const {
        return id == o.id && kind == o.kind && euler_weight == o.euler_weight && m == o.m &&
               q == o.q && genus == o.genus && component_degree == o.component_degree &&
               arrows == o.arrows && in_t_prime == o.in_t_prime;
    }
};

struct GraphEdge {
    std::string a, b; // a < b lexicographically
    int mult = 1;
    bool operator==(const GraphEdge& o) const { return a == o.a && b == o.b && mult == o.mult; }
};

struct GraphMeta {
    std::string graph;                     // "T" or "G0"
    std::optional<std::string> case_tag;   // "Case1" / "Case2"
    int r = 0;
    std::vector<int> k_list;
    std::optional<int> n0;
    std::vector<std::string> derived;      // decorations computed, not quoted

    bool operator==(const GraphMeta& o) const {
        return graph == o.graph && case_tag == o.case_tag && r == o.r && k_list == o.k_list &&
               n0 == o.n0 && derived == o.derived;
    }
};

struct DualGraph {
    GraphMeta meta;
    std::vector<GraphVertex> vertices; // sorted by id
    std::vector<GraphEdge> edges;      // sorted by (a, b)

    void add_vertex(GraphVertex v) { vertices.push_back(std::move(v)); }
    void add_edge(const std::string& a, const std::string& b, int mult = 1) {
        GraphEdge e;
        e.a = std::min(a, b);
        e.b = std::max(a, b);
        e.mult = mult;
        edges.push_back(std::move(e));
    }
    void sort() {
        std::sort(vertices.begin(), vertices.end(),
                  [](const GraphVertex& x, const GraphVertex& y) { return x.id < y.id; });
        std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
    }

    const GraphVertex& vertex(const std::string& id) const {
        for (const auto& v : vertices)
            if (v.id == id) return v;
        throw std::out_of_range("no vertex " + id);
    }

    // valency counting arrows, multi-edges with multiplicity
    int valency(const std::string& id) const {
        int val = vertex(id).arrows;
        for (const auto& e : edges)
            if (e.a == id || e.b == id) val += e.mult;
        return val;
    }

    std::vector<std::string> neighbors(const std::string& id) const {
        std::vector<std::string> out;
        for (const auto& e : edges) {
            if (e.a == id) out.push_back(e.b);
            if (e.b == id) out.push_back(e.a);
        }
        return out;
    }

    bool operator==(const DualGraph& o) const {
        return meta == o.meta && vertices == o.vertices && edges == o.edges;
    }
};

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::ordered_json graph_to_json(const DualGraph& g) {
    nlohmann::ordered_json j;
    j["schema"] = "sislne-graph/1";
    j["graph"] = g.meta.graph;
    nlohmann::ordered_json meta;
    meta["case"] = g.meta.case_tag ? nlohmann::ordered_json(*g.meta.case_tag)
                                   : nlohmann::ordered_json(nullptr);
    meta["r"] = g.meta.r;
    meta["kList"] = g.meta.k_list;
    meta["N0"] = g.meta.n0 ? nlohmann::ordered_json(*g.meta.n0) : nlohmann::ordered_json(nullptr);
    meta["derived"] = g.meta.derived;
    j["meta"] = meta;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["kind"] = to_string(v.kind);
        jv["weight"] = v.euler_weight;
        jv["m"] = v.m;
        jv["q"] = v.q ? nlohmann::ordered_json(to_string(*v.q)) : nlohmann::ordered_json(nullptr);
        jv["genus"] = v.genus ? nlohmann::ordered_json(*v.genus) : nlohmann::ordered_json(nullptr);
        jv["degree"] = v.component_degree ? nlohmann::ordered_json(*v.component_degree)
                                          : nlohmann::ordered_json(nullptr);
        jv["arrows"] = v.arrows;
        jv["inTPrime"] = v.in_t_prime ? nlohmann::ordered_json(*v.in_t_prime)
                                      : nlohmann::ordered_json(nullptr);
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
        nlohmann::ordered_json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["mult"] = e.mult;
        j["edges"].push_back(je);
    }
    return j;
}

inline std::string emit_json(const DualGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline DualGraph graph_from_json(const nlohmann::json& j) {
    DualGraph g;
    g.meta.graph = j.at("graph").get<std::string>();
    const auto& meta = j.at("meta");
    if (!meta.at("case").is_null()) g.meta.case_tag = meta.at("case").get<std::string>();
    g.meta.r = meta.at("r").get<int>();
    g.meta.k_list = meta.at("kList").get<std::vector<int>>();
    if (!meta.at("N0").is_null()) g.meta.n0 = meta.at("N0").get<int>();
    g.meta.derived = meta.at("derived").get<std::vector<std::string>>();
    for (const auto& jv : j.at("vertices")) {
        GraphVertex v;
        v.id = jv.at("id").get<std::string>();
        v.kind = vertex_kind_from(jv.at("kind").get<std::string>());
        v.euler_weight = jv.at("weight").get<int>();
        v.m = jv.at("m").get<long long>();
        if (!jv.at("q").is_null()) v.q = parse_rational(jv.at("q").get<std::string>());
        if (!jv.at("genus").is_null()) v.genus = jv.at("genus").get<long long>();
        if (!jv.at("degree").is_null()) v.component_degree = jv.at("degree").get<int>();
        v.arrows = jv.at("arrows").get<int>();
        if (!jv.at("inTPrime").is_null()) v.in_t_prime = jv.at("inTPrime").get<bool>();
        g.add_vertex(std::move(v));
    }
    for (const auto& je : j.at("edges"))
        g.add_edge(je.at("a").get<std::string>(), je.at("b").get<std::string>(),
                   je.at("mult").get<int>());
    g.sort();
    return g;
}

inline DualGraph parse_graph_json(const std::string& text) {
    return graph_from_json(nlohmann::json::parse(text));
}

inline std::string emit_dot(const DualGraph& g) {
    std::ostringstream os;
    os << "graph " << g.meta.graph << " {\n";
    os << "  node [fontsize=10];\n";
    for (const auto& v : g.vertices) {
        bool circled = v.kind == VertexKind::Root || v.kind == VertexKind::LNode;
        os << "  \"" << v.id << "\" [shape=" << (circled ? "doublecircle" : "circle")
           << ", label=\"w=" << v.euler_weight << ", m=" << v.m;
        if (v.q) os << ", q=" << to_string(*v.q);
        if (v.genus && *v.genus != 0) os << ", g=" << *v.genus;
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        for (int i = 0; i < e.mult; ++i)
            os << "  \"" << e.a << "\" -- \"" << e.b << "\";\n";
    // arrowhead pseudo-vertices
    for (const auto& v : g.vertices)
        for (int i = 0; i < v.arrows; ++i) {
            std::string aid = v.id + ".arrow" + std::to_string(i);
            os << "  \"" << aid << "\" [shape=none, label=\"\"];\n";
            os << "  \"" << v.id << "\" -- \"" << aid << "\" [dir=forward, arrowhead=vee];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace sislne

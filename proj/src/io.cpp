#include "graphck/io.hpp"

#include <fstream>
#include <sstream>

#include "graphck/errors.hpp"

namespace graphck {

namespace {

std::string integer_string(const Integer& x) {
    return x.str();
}

json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return integer_string(x);
}

json set_json(const std::vector<VertexId>& names, const VertexSet& s) {
    json out = json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (s[i]) {
            out.push_back(names[i]);
        }
    }
    return out;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string pair_label(const std::vector<VertexId>& names, const AdmissiblePair& p) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (p.H[i]) {
            label += (first ? "" : ",") + names[i];
            first = false;
        }
    }
    label += "}";
    bool any = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (p.S[i]) {
            label += (any ? "," : " | ") + names[i];
            any = true;
        }
    }
    return label;
}

} // namespace

json to_json(const CoefficientSystem& c) {
    json out = json::array();
    for (const auto& [t, n] : c) {
        json edges = json::array();
        for (const auto& e : t.edges) {
            edges.push_back(to_json(e));
        }
        out.push_back(json{{"v", t.vertex}, {"T", std::move(edges)}, {"n", n}});
    }
    return out;
}

CoefficientSystem system_from_json(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("coefficient system must be an array of terms");
    }
    CoefficientSystem c;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("v") || !term.at("v").is_string()) {
            throw ValidationError("term needs a vertex \"v\"");
        }
        std::vector<EdgeRef> edges;
        if (term.contains("T")) {
            for (const auto& e : term.at("T")) {
                edges.push_back(edge_from_json(e));
            }
        }
        const json n = term.value("n", json(1U));
        if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) {
            throw ValidationError("term multiplicity \"n\" must be a positive integer");
        }
        std::size_t count = edges.size();
        Term t = make_term(term.at("v").get<std::string>(), std::move(edges));
        if (std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end() || t.edges.size() != count) {
            throw ValidationError("repeated edge in a term");
        }
        c[t] += n.get<std::uint64_t>();
    }
    return c;
}

json to_json(const ProjectionSequence& s) {
    json head = json::array();
    for (const auto& c : s.head) {
        head.push_back(to_json(c));
    }
    json out{{"head", std::move(head)}};
    if (s.tail) {
        out["tail"] = to_json(*s.tail);
    }
    return out;
}

ProjectionSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("head") || !j.at("head").is_array()) {
        throw ValidationError("sequence needs a \"head\" array");
    }
    ProjectionSequence s;
    for (const auto& c : j.at("head")) {
        s.head.push_back(system_from_json(c));
    }
    if (j.contains("tail") && !j.at("tail").is_null()) {
        s.tail = system_from_json(j.at("tail"));
    }
    return s;
}

json to_json(const MultiplicityVector& m) {
    json out = json::object();
    for (const auto& [v, n] : m) {
        out[v] = to_json(n);
    }
    return out;
}

MultiplicityVector multiplicities_from_json(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("multiplicities must be an object");
    }
    MultiplicityVector m;
    for (const auto& [k, v] : j.items()) {
        m[k] = extnat_from_json(v);
    }
    return m;
}

json to_json(const CornerGraph& cg) {
    return json{{"base", to_json(cg.base)}, {"heads", to_json(MultiplicityVector(cg.heads))}};
}

CornerGraph corner_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("heads")) {
        throw ValidationError("corner graph needs \"base\" and \"heads\"");
    }
    CornerGraph cg{graph_from_json(j.at("base")), multiplicities_from_json(j.at("heads"))};
    for (const auto& v : cg.base.vertices()) {
        if (!cg.heads.count(v)) {
            throw ValidationError("no head length for '" + v + "'");
        }
    }
    if (cg.heads.size() != cg.base.size()) {
        throw ValidationError("head lengths name vertices outside the base graph");
    }
    return cg;
}

json to_json(const KTheoryPair& k) {
    json factors = json::array();
    for (const auto& d : k.k0_invariant_factors) {
        factors.push_back(integer_json(d));
    }
    return json{{"k0_invariant_factors", std::move(factors)},
                {"k0_free_rank", k.k0_free_rank},
                {"k1_free_rank", k.k1_free_rank}};
}

json to_json(const K0Class& c) {
    json residues = json::array();
    json moduli = json::array();
    for (std::size_t i = 0; i < c.residues.size(); ++i) {
        residues.push_back(integer_json(c.residues[i]));
        moduli.push_back(integer_json(c.moduli[i]));
    }
    return json{{"residues", std::move(residues)}, {"moduli", std::move(moduli)}};
}

json to_json(const VertexClass& c) {
    return json{{"kind", to_string(c.kind)},
                {"is_source", c.is_source},
                {"supports_loop", c.supports_loop},
                {"loop_count", to_json(c.loop_count)}};
}

json to_json(const StablyCompleteReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back(json{{"condition", v.condition}, {"witnesses", v.witnesses}});
    }
    return json{{"satisfied", r.satisfied}, {"violations", std::move(violations)}};
}

json to_json(const IdealLattice& l) {
    json nodes = json::array();
    for (const auto& p : l.nodes) {
        nodes.push_back(json{{"H", set_json(l.vertices, p.H)}, {"S", set_json(l.vertices, p.S)}});
    }
    json order = json::array();
    for (auto [a, b] : l.order) {
        order.push_back(json::array({a, b}));
    }
    json hasse = json::array();
    for (auto [a, b] : l.hasse) {
        hasse.push_back(json::array({a, b}));
    }
    return json{{"nodes", std::move(nodes)}, {"order", std::move(order)}, {"hasse", std::move(hasse)}};
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n";
    for (const auto& v : g.vertices()) {
        out << "  " << quoted(v) << ";\n";
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            ExtNat a = g.at(u, v);
            if (a.positive()) {
                out << "  " << quoted(g.name(u)) << " -> " << quoted(g.name(v))
                    << " [label=" << quoted(a.is_inf() ? "∞" : a.to_string()) << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const IdealLattice& l) {
    std::ostringstream out;
    out << "digraph \"ideals\" {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < l.nodes.size(); ++i) {
        out << "  n" << i << " [label=" << quoted(pair_label(l.vertices, l.nodes[i])) << "];\n";
    }
    for (auto [a, b] : l.hasse) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace graphck

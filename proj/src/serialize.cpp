#include "graphck/serialize.hpp"

#include <cstdio>

#include "graphck/errors.hpp"

namespace graphck {

json to_json(ExtNat n) {
    if (n.is_inf()) {
        return "inf";
    }
    return n.value();
}

ExtNat extnat_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") {
        return kInf;
    }
    if (j.is_number_unsigned()) {
        std::uint64_t v = j.get<std::uint64_t>();
        if (ExtNat(v).is_inf()) {
            throw ValidationError("multiplicity out of range");
        }
        return v;
    }
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    }
    throw ValidationError("expected a nonnegative integer or \"inf\", got " + j.dump());
}

json to_json(const EdgeRef& e) {
    return json::array({e.src, e.dst, e.index});
}

EdgeRef edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_string() || !j[1].is_string() ||
        !j[2].is_number_unsigned()) {
        throw ValidationError("edge must be [src, dst, index], got " + j.dump());
    }
    return EdgeRef{j[0].get<std::string>(), j[1].get<std::string>(), j[2].get<std::uint64_t>()};
}

json to_json(const Graph& g) {
    json rows = json::array();
    for (std::size_t u = 0; u < g.size(); ++u) {
        json row = json::array();
        for (std::size_t v = 0; v < g.size(); ++v) {
            row.push_back(to_json(g.at(u, v)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"vertices", g.vertices()}, {"adjacency", std::move(rows)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("adjacency")) {
        throw ValidationError("graph needs \"vertices\" and \"adjacency\"");
    }
    const json& vs = j.at("vertices");
    const json& rows = j.at("adjacency");
    if (!vs.is_array() || !rows.is_array()) {
        throw ValidationError("\"vertices\" and \"adjacency\" must be arrays");
    }
    std::vector<VertexId> names;
    for (const auto& v : vs) {
        if (!v.is_string()) {
            throw ValidationError("vertex names must be strings");
        }
        names.push_back(v.get<std::string>());
    }
    std::vector<std::vector<ExtNat>> adj;
    for (const auto& row : rows) {
        if (!row.is_array()) {
            throw ValidationError("adjacency rows must be arrays");
        }
        std::vector<ExtNat> r;
        for (const auto& x : row) {
            r.push_back(extnat_from_json(x));
        }
        adj.push_back(std::move(r));
    }
    return Graph(std::move(names), std::move(adj));
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(g).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace graphck

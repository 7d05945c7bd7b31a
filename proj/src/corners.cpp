#include "graphck/corners.hpp"

#include <algorithm>
#include <functional>

#include "graphck/errors.hpp"

namespace graphck {

CornerGraph stabilize(const Graph& g) {
    CornerGraph cg{g, {}};
    for (const auto& v : g.vertices()) {
        cg.heads[v] = kInf;
    }
    return cg;
}

CornerGraph corner_graph(const Graph& g, const MultiplicityVector& m) {
    CornerGraph cg{g, {}};
    for (const auto& v : g.vertices()) {
        auto it = m.find(v);
        if (it == m.end() || it->second.is_zero()) {
            throw DomainError("multiplicity of '" + v + "' must be at least 1");
        }
        cg.heads[v] = it->second.dec();
    }
    if (m.size() != g.size()) {
        throw ValidationError("multiplicity vector names vertices outside the graph");
    }
    return cg;
}

VertexId head_vertex(const VertexId& v, std::uint64_t i) {
    return v + "[" + std::to_string(i) + "]";
}

Graph realize(const CornerGraph& cg) {
    const Graph& g = cg.base;
    std::vector<VertexId> names = g.vertices();
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // single edges between new indices
    for (std::size_t v = 0; v < g.size(); ++v) {
        ExtNat h = cg.heads.at(g.name(v));
        if (h.is_inf()) {
            throw CannotRealize("'" + g.name(v) + "' has an infinite head");
        }
        std::size_t below = v;
        for (std::uint64_t i = 1; i <= h.value(); ++i) {
            VertexId name = head_vertex(g.name(v), i);
            if (std::find(names.begin(), names.end(), name) != names.end()) {
                throw CannotRealize("head vertex name '" + name + "' is already taken");
            }
            names.push_back(std::move(name));
            edges.emplace_back(names.size() - 1, below);
            below = names.size() - 1;
        }
    }
    const std::size_t n = names.size();
    std::vector<ExtNat> flat(n * n, ExtNat(0));
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            flat[u * n + v] = g.at(u, v);
        }
    }
    for (auto [a, b] : edges) {
        flat[a * n + b] = 1;
    }
    return Graph(std::move(names), std::move(flat));
}

Graph build_EH(const Graph& g, const VertexSet& h) {
    const std::size_t n = g.size();
    if (h.size() != n) {
        throw ValidationError("vertex set size does not match graph");
    }
    if (!is_hereditary(g, h)) {
        throw DomainError("H is not hereditary");
    }
    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < n; ++v) {
        if (!h[v]) {
            outside.push_back(v);
        }
    }
    for (std::size_t v : outside) {
        if (!g.is_regular(v)) {
            throw DomainError("'" + g.name(v) + "' outside H is not regular");
        }
    }
    {
        Graph rest = induced_subgraph(g, outside);
        for (std::size_t v = 0; v < rest.size(); ++v) {
            if (simple_cycle_count_at(rest, v) != CycleCount::zero) {
                throw DomainError("the complement of H contains a cycle through '" + rest.name(v) + "'");
            }
        }
    }
    const auto reach = reachability(g);
    for (std::size_t v : outside) {
        bool hits = false;
        for (std::size_t w = 0; w < n && !hits; ++w) {
            hits = h[w] && reach[v][w];
        }
        if (!hits) {
            throw DomainError("'" + g.name(v) + "' outside H does not reach H");
        }
    }
    // Longest path within the complement bounds every path into H; it is
    // finite because the complement is acyclic and regular vertices emit
    // finitely many edges. Enumerate F(H) explicitly.
    std::vector<VertexId> names;
    for (std::size_t v = 0; v < n; ++v) {
        if (h[v]) {
            names.push_back(g.name(v));
        }
    }
    std::vector<std::pair<VertexId, std::size_t>> spikes;  // (name, target)
    std::vector<EdgeRef> path;
    std::function<void(std::size_t)> walk = [&](std::size_t x) {
        for (std::size_t y = 0; y < n; ++y) {
            ExtNat a = g.at(x, y);
            for (std::uint64_t i = 0; a.positive() && i < a.value(); ++i) {
                path.push_back(EdgeRef{g.name(x), g.name(y), i});
                if (h[y]) {
                    std::string label;
                    for (const auto& e : path) {
                        label += "e(" + e.src + "→" + e.dst + "," + std::to_string(e.index) + ")";
                    }
                    spikes.emplace_back(std::move(label), y);
                } else {
                    walk(y);
                }
                path.pop_back();
            }
        }
    };
    for (std::size_t v : outside) {
        walk(v);
    }
    std::vector<std::size_t> h_index(n, 0);
    for (std::size_t v = 0, k = 0; v < n; ++v) {
        if (h[v]) {
            h_index[v] = k++;
        }
    }
    const std::size_t base = names.size();
    for (const auto& [name, target] : spikes) {
        names.push_back(name);
    }
    const std::size_t m = names.size();
    std::vector<ExtNat> flat(m * m, ExtNat(0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (h[u] && h[v]) {
                flat[h_index[u] * m + h_index[v]] = g.at(u, v);
            }
        }
    }
    for (std::size_t k = 0; k < spikes.size(); ++k) {
        flat[(base + k) * m + h_index[spikes[k].second]] = 1;
    }
    return Graph(std::move(names), std::move(flat));
}

Graph unitize(const CornerGraph& cg) {
    const Graph& g = cg.base;
    std::vector<VertexId> names = g.vertices();
    names.push_back(fresh_name(names, kStar));
    const std::size_t n = names.size();
    std::vector<ExtNat> flat(n * n, ExtNat(0));
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            flat[u * n + v] = g.at(u, v);
        }
        flat[(n - 1) * n + u] = cg.heads.at(g.name(u));
    }
    return Graph(std::move(names), std::move(flat));
}

} // namespace graphck

#include "graphck/ideals.hpp"

#include "graphck/errors.hpp"

namespace graphck {

namespace {

VertexSet breaking_unchecked(const Graph& g, const VertexSet& h) {
    VertexSet out(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (h[v] || !g.is_infinite_emitter(v)) {
            continue;
        }
        ExtNat leaving;
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (!h[w]) {
                leaving += g.at(v, w);
            }
        }
        out[v] = leaving.positive() && leaving.is_finite();
    }
    return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
            return false;
        }
    }
    return true;
}

} // namespace

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
    if (h.size() != g.size()) {
        throw ValidationError("vertex set size does not match graph");
    }
    if (!is_hereditary(g, h) || !is_saturated(g, h)) {
        throw DomainError("breaking vertices need a hereditary saturated set");
    }
    return breaking_unchecked(g, h);
}

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
    if (p.H.size() != g.size() || p.S.size() != g.size()) {
        return false;
    }
    if (!is_hereditary(g, p.H) || !is_saturated(g, p.H)) {
        return false;
    }
    return subset(p.S, breaking_unchecked(g, p.H));
}

bool precedes(const AdmissiblePair& a, const AdmissiblePair& b) {
    if (!subset(a.H, b.H)) {
        return false;
    }
    for (std::size_t i = 0; i < a.S.size(); ++i) {
        if (a.S[i] && !b.H[i] && !b.S[i]) {
            return false;
        }
    }
    return true;
}

IdealLattice admissible_pairs(const Graph& g, std::size_t max_vertices) {
    const std::size_t n = g.size();
    if (n > max_vertices) {
        throw DomainError("ideal enumeration limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                          std::to_string(n));
    }
    IdealLattice lattice;
    lattice.vertices = g.vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet h(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = (mask >> i) & 1U;
        }
        if (!is_hereditary(g, h) || !is_saturated(g, h)) {
            continue;
        }
        std::vector<std::size_t> breaking;
        VertexSet b = breaking_unchecked(g, h);
        for (std::size_t i = 0; i < n; ++i) {
            if (b[i]) {
                breaking.push_back(i);
            }
        }
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << breaking.size()); ++sub) {
            VertexSet s(n, false);
            for (std::size_t k = 0; k < breaking.size(); ++k) {
                s[breaking[k]] = (sub >> k) & 1U;
            }
            lattice.nodes.push_back(AdmissiblePair{h, std::move(s)});
        }
    }
    const std::size_t m = lattice.nodes.size();
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            le[i][j] = precedes(lattice.nodes[i], lattice.nodes[j]);
            if (le[i][j]) {
                lattice.order.emplace_back(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || !le[i][j]) {
                continue;
            }
            bool covers = true;
            for (std::size_t k = 0; k < m && covers; ++k) {
                covers = k == i || k == j || !le[i][k] || !le[k][j];
            }
            if (covers) {
                lattice.hasse.emplace_back(i, j);
            }
        }
    }
    return lattice;
}

Graph restriction_graph(const Graph& g, const AdmissiblePair& p) {
    if (!is_admissible(g, p)) {
        throw DomainError("restriction needs an admissible pair");
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (p.H[i] || p.S[i]) {
            keep.push_back(i);
        }
    }
    std::vector<VertexId> names;
    std::vector<ExtNat> flat;
    for (std::size_t x : keep) {
        names.push_back(g.name(x));
        for (std::size_t y : keep) {
            flat.push_back(p.H[y] ? g.at(x, y) : ExtNat(0));
        }
    }
    return Graph(std::move(names), std::move(flat));
}

} // namespace graphck

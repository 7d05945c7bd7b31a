#include "graphck/corpus.hpp"

#include "graphck/errors.hpp"

namespace graphck {

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_vertices));
    std::discrete_distribution<int> entry({55, 20, 15, 10});
    const std::size_t n = size(rng);
    std::vector<VertexId> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
    }
    std::vector<ExtNat> flat(n * n);
    for (auto& a : flat) {
        int k = entry(rng);
        a = k == 3 ? kInf : ExtNat(static_cast<std::uint64_t>(k));
    }
    return Graph(std::move(names), std::move(flat));
}

std::string MoveSpec::describe() const {
    std::string s = to_string(kind);
    if (!vertex.empty()) {
        s += " " + vertex;
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        s += (i == 0 ? " " : ",") + path[i];
    }
    if (kind == MoveKind::O) {
        s += " " + to_json(partition).dump();
    }
    return s;
}

namespace {

bool column_legal(const Graph& g, std::size_t u, std::size_t v) {
    return u != v && g.at(u, v).positive() && !(g.out_degree(u) == ExtNat(1) && g.at(u, u).is_zero());
}

} // namespace

std::vector<MoveSpec> applicable_moves(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<MoveSpec> out;
    bool any_source = false;
    for (std::size_t u = 0; u < n; ++u) {
        if (g.is_regular(u) && g.at(u, u).is_zero() && !g.is_source(u)) {
            out.push_back(MoveSpec{MoveKind::COLLAPSE, g.name(u), {}, {}});
        }
        any_source = any_source || (g.is_regular(u) && g.is_source(u));
    }
    if (any_source) {
        out.push_back(MoveSpec{MoveKind::S, {}, {}, {}});
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (!g.at(v, w).is_inf()) {
                continue;
            }
            for (std::size_t x = 0; x < n; ++x) {
                if (g.at(w, x).positive()) {
                    out.push_back(MoveSpec{MoveKind::T, {}, {g.name(v), g.name(w), g.name(x)}, {}});
                }
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (column_legal(g, u, v)) {
                out.push_back(MoveSpec{MoveKind::COLADD, {}, {g.name(u), g.name(v)}, {}});
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a || !g.at(a, b).positive()) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (c != b && column_legal(g, b, c)) {
                    out.push_back(MoveSpec{MoveKind::COLADD, {}, {g.name(a), g.name(b), g.name(c)}, {}});
                }
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (g.is_sink(u)) {
            continue;
        }
        if (g.is_infinite_emitter(u)) {
            out.push_back(MoveSpec{MoveKind::BREAKSPLIT, g.name(u), {}, {}});
        }
        PartitionClass rest;
        rest.remainder = true;
        out.push_back(MoveSpec{MoveKind::O, g.name(u), {}, Partition{{rest}}});
        std::size_t first = 0;
        while (!g.at(u, first).positive()) {
            ++first;
        }
        if (g.out_degree(u) > ExtNat(1)) {
            PartitionClass one;
            one.edges.push_back(EdgeRef{g.name(u), g.name(first), 0});
            out.push_back(MoveSpec{MoveKind::O, g.name(u), {}, Partition{{one, rest}}});
        }
        // One class per target, when at most one target is infinite.
        std::size_t infinite = 0;
        std::size_t targets = 0;
        Partition per_target;
        for (std::size_t y = 0; y < n; ++y) {
            if (g.at(u, y).positive()) {
                ++targets;
                infinite += g.at(u, y).is_inf() ? 1 : 0;
                per_target.classes.push_back(PartitionClass{{}, {g.name(y)}, false});
            }
        }
        if (targets > 1 && infinite <= 1) {
            out.push_back(MoveSpec{MoveKind::O, g.name(u), {}, per_target});
        }
    }
    return out;
}

MoveResult apply(const Graph& g, const MoveSpec& m) {
    switch (m.kind) {
    case MoveKind::O: return out_split(g, m.vertex, m.partition);
    case MoveKind::S: return remove_regular_sources(g);
    case MoveKind::T: return move_T(g, m.path);
    case MoveKind::COLLAPSE: return collapse(g, m.vertex);
    case MoveKind::COLADD:
        if (m.path.size() == 2) {
            return column_add(g, m.path[0], m.path[1]);
        }
        return column_ops_along_path(g, m.path);
    case MoveKind::BREAKSPLIT: return split_breaking(g, m.vertex);
    }
    throw InternalError("unknown move kind");
}

std::optional<MoveSpec> random_move(std::mt19937_64& rng, const Graph& g) {
    auto moves = applicable_moves(g);
    if (moves.empty()) {
        return std::nullopt;
    }
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(rng)];
}

} // namespace graphck

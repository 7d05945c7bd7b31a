#include "graphck/canonical.hpp"

#include <map>
#include <utility>

#include "graphck/errors.hpp"

namespace graphck {

StablyCompleteReport is_stably_complete(const Graph& g) {
    StablyCompleteReport report;
    const std::size_t n = g.size();
    const auto dom = dominance(g);
    auto flag = [&](int condition, std::vector<VertexId> witnesses) {
        report.violations.push_back(Violation{condition, std::move(witnesses)});
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (g.is_regular(v) && g.at(v, v).is_zero()) {
            flag(2, {g.name(v)});
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (simple_cycle_count_at(g, v) == CycleCount::two_or_more && g.at(v, v) < ExtNat(2)) {
            flag(3, {g.name(v)});
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!g.is_infinite_emitter(v)) {
            continue;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (dom[v][w] && !g.at(v, w).is_inf()) {
                flag(4, {g.name(v), g.name(w)});
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (dom[v][w] && g.at(v, w).is_zero()) {
                flag(5, {g.name(v), g.name(w)});
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!g.is_infinite_emitter(v) || g.at(v, v).is_zero()) {
            continue;
        }
        bool companion = false;
        for (std::size_t w = 0; w < n && !companion; ++w) {
            companion = g.is_regular(w) && dom[v][w] && dom[w][v];
        }
        if (!companion) {
            flag(6, {g.name(v)});
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

namespace {

void absorb(MoveResult& acc, MoveResult step) {
    acc.graph = std::move(step.graph);
    for (auto& r : step.trace) {
        acc.trace.push_back(std::move(r));
    }
}

std::vector<VertexId> names_of(const Graph& g, const std::vector<std::size_t>& path) {
    std::vector<VertexId> out;
    for (std::size_t i : path) {
        out.push_back(g.name(i));
    }
    return out;
}

// Shortest closed path at v of length at least 2.
std::vector<std::size_t> shortest_long_cycle(const Graph& g, std::size_t v) {
    std::vector<ExtNat> flat = g.flat();
    flat[v * g.size() + v] = ExtNat(0);
    return shortest_path(Graph(g.vertices(), std::move(flat)), v, v);
}

bool has_regular_companion(const Graph& g, std::size_t v, const std::vector<std::vector<bool>>& dom) {
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (g.is_regular(w) && dom[v][w] && dom[w][v]) {
            return true;
        }
    }
    return false;
}

} // namespace

MoveResult canonicalize(const Graph& g, const CanonicalizeOptions& options) {
    MoveResult acc{g, {}};

    // Separate the finitely many edges of each infinite emitter.
    std::vector<VertexId> emitters;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_infinite_emitter(v)) {
            emitters.push_back(g.name(v));
        }
    }
    for (const auto& v : emitters) {
        absorb(acc, split_breaking(acc.graph, v));
    }

    // Infinite emitters emit infinitely to everything they dominate.
    {
        const Graph& cur = acc.graph;
        const auto dom = dominance(cur);
        std::vector<std::vector<VertexId>> paths;
        for (std::size_t v = 0; v < cur.size(); ++v) {
            if (!cur.is_infinite_emitter(v)) {
                continue;
            }
            for (std::size_t w = 0; w < cur.size(); ++w) {
                if (dom[v][w]) {
                    paths.push_back(names_of(cur, shortest_path(cur, v, w)));
                }
            }
        }
        for (const auto& p : paths) {
            absorb(acc, move_T(acc.graph, p));
        }
    }

    absorb(acc, remove_regular_sources(acc.graph));

    // Every regular vertex that is left gets a loop.
    for (;;) {
        const Graph& cur = acc.graph;
        std::optional<std::size_t> pick;
        for (std::size_t v = 0; v < cur.size() && !pick; ++v) {
            if (cur.is_regular(v) && cur.at(v, v).is_zero() && !cur.is_source(v)) {
                pick = v;
            }
        }
        if (!pick) {
            break;
        }
        absorb(acc, collapse(cur, cur.name(*pick)));
    }

    // Looped infinite emitters without a regular companion get one: the
    // first child takes one edge to each dominated vertex, the second the rest.
    for (;;) {
        const Graph& cur = acc.graph;
        const auto dom = dominance(cur);
        std::optional<std::size_t> pick;
        for (std::size_t v = 0; v < cur.size() && !pick; ++v) {
            if (cur.is_infinite_emitter(v) && cur.at(v, v).positive() && !has_regular_companion(cur, v, dom)) {
                pick = v;
            }
        }
        if (!pick) {
            break;
        }
        const std::size_t v = *pick;
        PartitionClass first;
        for (std::size_t w = 0; w < cur.size(); ++w) {
            if (dom[v][w]) {
                first.edges.push_back(EdgeRef{cur.name(v), cur.name(w), 0});
            }
        }
        PartitionClass rest;
        rest.remainder = true;
        absorb(acc, out_split(cur, cur.name(v), Partition{{first, rest}}));
    }

    // Column operations until dominance gives direct edges and vertices on
    // two simple cycles carry two loops.
    const std::size_t n = acc.graph.size();
    const std::size_t fuel = options.fuel.value_or(n * n);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> spent;
    for (;;) {
        const Graph& cur = acc.graph;
        const auto dom = dominance(cur);
        std::vector<std::size_t> path;
        std::pair<std::size_t, std::size_t> pair;
        for (std::size_t v = 0; v < cur.size() && path.empty(); ++v) {
            if (!cur.is_regular(v)) {
                continue;
            }
            for (std::size_t w = 0; w < cur.size() && path.empty(); ++w) {
                if (dom[v][w] && cur.at(v, w).is_zero()) {
                    path = shortest_path(cur, v, w);
                    pair = {v, w};
                }
            }
            if (path.empty() && cur.at(v, v) == ExtNat(1) &&
                simple_cycle_count_at(cur, v) == CycleCount::two_or_more) {
                path = shortest_long_cycle(cur, v);
                pair = {v, v};
            }
        }
        if (path.empty()) {
            break;
        }
        if (++spent[pair] > fuel) {
            throw InternalError("column-operation fuel exhausted at (" + cur.name(pair.first) + ", " +
                                cur.name(pair.second) + ")");
        }
        absorb(acc, column_ops_along_path(cur, names_of(cur, path)));
    }

    auto report = is_stably_complete(acc.graph);
    if (!report.satisfied) {
        const auto& v = report.violations.front();
        throw InternalError("canonical form violates condition (" + std::to_string(v.condition) + ")");
    }
    return acc;
}

} // namespace graphck

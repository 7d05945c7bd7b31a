#pragma once

// Random inputs for the projection calculus: stably complete graphs with a
// vertex of a requested kind, and valid sequences around that vertex.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "graphck/canonical.hpp"
#include "graphck/corpus.hpp"
#include "graphck/errors.hpp"
#include "graphck/projcalc.hpp"

namespace gen {

using namespace graphck;

enum class EmitterKind { looped, dominated, undominated };

inline bool has_regular_dominator(const Graph& g, std::size_t v) {
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (g.is_regular(w) && dominates(g, w, v)) {
            return true;
        }
    }
    return false;
}

inline bool is_kind(const Graph& g, std::size_t v, EmitterKind k) {
    if (!g.is_infinite_emitter(v)) {
        return false;
    }
    const bool loop = g.at(v, v).positive();
    switch (k) {
    case EmitterKind::looped:
        return loop;
    case EmitterKind::dominated:
        return !loop && has_regular_dominator(g, v);
    case EmitterKind::undominated:
        return !loop && !has_regular_dominator(g, v);
    }
    return false;
}

struct Target {
    Graph g;
    std::size_t v = 0;
};

/// A stably complete graph with a vertex of kind k, from canonicalized
/// random graphs.
inline Target stably_complete_with(std::mt19937_64& rng, EmitterKind k) {
    for (;;) {
        Graph g = canonicalize(random_graph(rng, 5)).graph;
        std::vector<std::size_t> hits;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (is_kind(g, v, k)) {
                hits.push_back(v);
            }
        }
        if (!hits.empty()) {
            return Target{g, hits[rng() % hits.size()]};
        }
    }
}

/// Random edge set at u of size 1..2; empty when u has no edges.
inline std::vector<EdgeRef> random_edges(std::mt19937_64& rng, const Graph& g, std::size_t u, bool inf_only) {
    std::vector<std::size_t> targets;
    for (std::size_t y = 0; y < g.size(); ++y) {
        if (inf_only ? g.at(u, y).is_inf() : g.at(u, y).positive()) {
            targets.push_back(y);
        }
    }
    std::set<EdgeRef> out;
    if (targets.empty()) {
        return {};
    }
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t y = targets[rng() % targets.size()];
        ExtNat a = g.at(u, y);
        std::uint64_t i = a.is_inf() ? rng() % 6 : rng() % a.value();
        out.insert(EdgeRef{g.name(u), g.name(y), i});
    }
    return {out.begin(), out.end()};
}

inline Term random_term(std::mt19937_64& rng, const Graph& g, std::size_t u, bool inf_only) {
    if (g.is_infinite_emitter(u) && rng() % 2 == 0) {
        return make_term(g.name(u), random_edges(rng, g, u, inf_only));
    }
    return make_term(g.name(u));
}

/// A partitioned sequence over t.g with a nonempty finite T at t.v. For the
/// dominated kind the first system carries (w, ∅) for a regular w ⪰ v; for
/// the other kinds the tail never has a nonempty term at v unless looped.
inline ProjectionSequence random_sequence(std::mt19937_64& rng, const Target& t, EmitterKind k) {
    const Graph& g = t.g;
    for (;;) {
        ProjectionSequence s;
        const std::size_t len = 1 + rng() % 3;
        for (std::size_t h = 0; h < len; ++h) {
            CoefficientSystem c;
            const std::size_t terms = 1 + rng() % 3;
            for (std::size_t j = 0; j < terms; ++j) {
                c[random_term(rng, g, rng() % g.size(), false)] += 1 + rng() % 3;
            }
            s.head.push_back(std::move(c));
        }
        std::vector<EdgeRef> tv = random_edges(rng, g, t.v, false);
        s.head[rng() % len][make_term(g.name(t.v), tv)] += 1 + rng() % 2;
        if (k == EmitterKind::dominated) {
            std::vector<std::size_t> dominators;
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (g.is_regular(w) && dominates(g, w, t.v)) {
                    dominators.push_back(w);
                }
            }
            s.head[0][make_term(g.name(dominators[rng() % dominators.size()]))] += 1;
        }
        if (k == EmitterKind::undominated) {
            // A term with an edge into v, when some vertex points at v.
            for (std::size_t u = 0; u < g.size(); ++u) {
                if (u != t.v && g.at(u, t.v).is_inf() && rng() % 2 == 0) {
                    std::vector<EdgeRef> es = random_edges(rng, g, u, false);
                    es.push_back(EdgeRef{g.name(u), g.name(t.v), 1 + rng() % 4});
                    s.head[rng() % len][make_term(g.name(u), es)] += 1;
                }
            }
        }
        if (rng() % 3 == 0) {
            CoefficientSystem tail;
            const std::size_t terms = 1 + rng() % 2;
            for (std::size_t j = 0; j < terms; ++j) {
                std::size_t u = rng() % g.size();
                if (u == t.v && k != EmitterKind::looped) {
                    tail[make_term(g.name(u))] += 1;
                } else {
                    tail[random_term(rng, g, u, true)] += 1;
                }
            }
            s.tail = std::move(tail);
        }
        try {
            ProjectionSequence p = make_partitioned(g, s);
            bool nonempty = false;
            for (const auto& c : p.head) {
                for (const auto& [term, n] : c) {
                    nonempty = nonempty || (term.vertex == g.name(t.v) && !term.edges.empty());
                }
            }
            if (nonempty) {
                return p;
            }
        } catch (const DomainError&) {
            // Too few parallel finite edges to separate the terms; redraw.
        }
    }
}

} // namespace gen

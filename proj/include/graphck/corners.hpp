#pragma once

#include <map>

#include "graphck/graph.hpp"
#include "graphck/projcalc.hpp"

namespace graphck {

/// A base graph with a head of length h_v hanging off every vertex v: the
/// head vertices v[1], ..., v[h_v] with single edges v[i] → v[i-1] and
/// v[0] = v. All heads infinite is the stabilization.
struct CornerGraph {
    Graph base;
    std::map<VertexId, ExtNat> heads;

    friend bool operator==(const CornerGraph&, const CornerGraph&) = default;
};

CornerGraph stabilize(const Graph& g);

/// Heads h_v = n_v − 1. Throws DomainError if some n_v is 0 or missing.
CornerGraph corner_graph(const Graph& g, const MultiplicityVector& m);

/// Name of the i-th head vertex above v (i ≥ 1).
VertexId head_vertex(const VertexId& v, std::uint64_t i);

/// Explicit graph: base vertices first, then each head bottom-up. Throws
/// CannotRealize for an infinite head.
Graph realize(const CornerGraph& cg);

/// Replaces the complement of H by one source per path α = e1...en that
/// starts outside H and whose last edge is the only one ending in H. Each
/// such source emits a single edge to r(α). Preconditions (checked, with
/// DomainError naming the failed one): H hereditary; the complement
/// induces an acyclic subgraph; every vertex outside H is regular and
/// reaches H; paths from each vertex outside H have bounded length.
Graph build_EH(const Graph& g, const VertexSet& h);

/// Base graph plus one vertex "⋆" with A(⋆, v) = h_v and no incoming edges.
Graph unitize(const CornerGraph& cg);

inline const VertexId kStar = "⋆";

} // namespace graphck

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "graphck/graph.hpp"

namespace graphck {

/// Infinite emitters v ∉ H sending at least one but finitely many edges
/// outside H. Throws DomainError unless H is hereditary and saturated.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

struct AdmissiblePair {
    VertexSet H;
    VertexSet S;

    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool is_admissible(const Graph& g, const AdmissiblePair& p);

/// (H1,S1) ≤ (H2,S2) iff H1 ⊆ H2 and S1 ⊆ H2 ∪ S2.
bool precedes(const AdmissiblePair& a, const AdmissiblePair& b);

struct IdealLattice {
    std::vector<VertexId> vertices;
    std::vector<AdmissiblePair> nodes;
    /// All pairs (i, j) with nodes[i] ≤ nodes[j], including i == j.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    /// Covering relations only.
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

/// Enumerates all admissible pairs by filtering every vertex subset.
/// Throws DomainError when g has more than `max_vertices` vertices.
IdealLattice admissible_pairs(const Graph& g, std::size_t max_vertices = 16);

/// Vertices H ∪ S in g's order: the rows of H, and the edges from S into H.
Graph restriction_graph(const Graph& g, const AdmissiblePair& p);

} // namespace graphck

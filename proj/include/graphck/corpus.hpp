#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphck/moves.hpp"

namespace graphck {

/// Graph with 1..max_vertices vertices, entries drawn from {0, 1, 2, ∞}
/// with weights 55/20/15/10.
Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices);

/// A concrete move with its parameters.
struct MoveSpec {
    MoveKind kind = MoveKind::O;
    VertexId vertex;                // O, COLLAPSE, BREAKSPLIT
    std::vector<VertexId> path;     // T, COLADD (u, v) or a column path
    Partition partition;            // O

    std::string describe() const;
};

/// Every move from a fixed deterministic family whose preconditions hold
/// in g: collapses, source removal, T-moves along two-step paths, single
/// and two-step column operations, breaking splits, and a few out-splits
/// per vertex.
std::vector<MoveSpec> applicable_moves(const Graph& g);

MoveResult apply(const Graph& g, const MoveSpec& m);

std::optional<MoveSpec> random_move(std::mt19937_64& rng, const Graph& g);

} // namespace graphck

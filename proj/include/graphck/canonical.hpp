#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphck/graph.hpp"
#include "graphck/moves.hpp"

namespace graphck {

struct Violation {
    int condition = 0;  // 1..6
    std::vector<VertexId> witnesses;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct StablyCompleteReport {
    bool satisfied = true;
    std::vector<Violation> violations;
};

/// Checks the six stably-complete conditions:
///  (1) finitely many vertices;
///  (2) every regular vertex supports a loop;
///  (3) a vertex based at two or more simple cycles supports two loops;
///  (4) an infinite emitter emits infinitely to every vertex it dominates;
///  (5) v ⪰ w implies an edge v → w;
///  (6) an infinite emitter with a loop has a regular w with v ⪰ w ⪰ v.
StablyCompleteReport is_stably_complete(const Graph& g);

struct CanonicalizeOptions {
    /// Column-operation rounds allowed per violating pair; |V|² when unset.
    std::optional<std::size_t> fuel;
};

/// Moves g to a stably complete graph. The trace replays from g to the
/// result. Throws InternalError if the result fails the check.
MoveResult canonicalize(const Graph& g, const CanonicalizeOptions& options = {});

} // namespace graphck

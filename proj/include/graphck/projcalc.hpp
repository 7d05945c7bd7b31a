#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphck/graph.hpp"
#include "graphck/ktheory.hpp"

namespace graphck {

/// The pair (v, T): the projection p_v minus the range projections of the
/// edges in T. `edges` is kept sorted and free of duplicates.
struct Term {
    VertexId vertex;
    std::vector<EdgeRef> edges;

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;
};

Term make_term(VertexId v, std::vector<EdgeRef> edges = {});

/// Term → positive multiplicity.
using CoefficientSystem = std::map<Term, std::uint64_t>;

/// A finite head followed, optionally, by a template repeated countably
/// often. Tail edge indices are labels: with m distinct labels on a pair
/// (v, w), repetition r uses the edge (v, w, label + 2·r·m).
struct ProjectionSequence {
    std::vector<CoefficientSystem> head;
    std::optional<CoefficientSystem> tail;

    friend bool operator==(const ProjectionSequence&, const ProjectionSequence&) = default;
};

using MultiplicityVector = std::map<VertexId, ExtNat>;

/// Throws ValidationError unless every edge of a term leaves its vertex,
/// exists in g, and nonempty T only occurs at infinite emitters. Tail
/// edges must lie on pairs with infinitely many edges.
void validate(const Graph& g, const CoefficientSystem& c);
void validate(const Graph& g, const ProjectionSequence& s);

/// Concrete system of tail repetition r.
CoefficientSystem tail_copy(const CoefficientSystem& tail, std::uint64_t r);

/// Σ n·(χ_v − Σ_{e∈T} χ_{r(e)}) over the vertices of g.
std::vector<Integer> class_vector(const Graph& g, const CoefficientSystem& c);
K0Class k0_class_of(const Graph& g, const CoefficientSystem& c);

/// Sum of all head systems.
CoefficientSystem total_head(const ProjectionSequence& s);

/// Vertices carrying a term anywhere in the sequence.
VertexSet support(const Graph& g, const ProjectionSequence& s);

/// Requires a stably complete g (DomainError otherwise).
bool is_full(const Graph& g, const ProjectionSequence& s);

/// Term sets are pairwise disjoint across head and every tail repetition,
/// and each pair with infinitely many edges keeps infinitely many unused.
bool is_partitioned(const Graph& g, const ProjectionSequence& s);

/// Re-indexes edges so that the sequence is partitioned. Head edges on
/// infinite pairs keep even unused indices and otherwise move to the
/// smallest unused even index; the tail is relabelled to consecutive even
/// indices above the head.
ProjectionSequence make_partitioned(const Graph& g, const ProjectionSequence& s);

/// Rewrites the sequence so that its first system has a term at every
/// vertex. Unchanged when the support already covers g.
ProjectionSequence fullify(const Graph& g, const ProjectionSequence& s);

/// Removes T from every (v, T) at an infinite emitter v with a loop.
ProjectionSequence eliminate_loop_emitter(const Graph& g, const ProjectionSequence& s, const VertexId& v);

/// Same for a loopless infinite emitter v below a regular vertex; merges
/// the head up to the last system with a nonempty (v, T).
ProjectionSequence eliminate_dominated_emitter(const Graph& g, const ProjectionSequence& s, const VertexId& v);

/// Same for a loopless infinite emitter v below no regular vertex. Terms
/// with edges into v receive fresh parallel edges towards r(T_v).
ProjectionSequence eliminate_undominated_emitter(const Graph& g, const ProjectionSequence& s,
                                                 const VertexId& v);

/// Requires a full, partitioned sequence on a stably complete graph where
/// every finite nonempty T_v lies below some infinite T_w.
MultiplicityVector to_multiplicities(const Graph& g, const ProjectionSequence& s);

/// Every vertex strictly below an infinite one gets multiplicity 1.
MultiplicityVector normalize_multiplicities(const Graph& g, const MultiplicityVector& m);

MultiplicityVector corner_pipeline(const Graph& g, const ProjectionSequence& s);

} // namespace graphck

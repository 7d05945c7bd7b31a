#pragma once

#include <string>
#include <vector>

#include "graphck/graph.hpp"
#include "graphck/serialize.hpp"

namespace graphck {

/// One block of a partition of s⁻¹(u). The block consists of the listed
/// edges, every edge towards the vertices in `all_to`, and, when `remainder`
/// is set, every edge of u not claimed by another block.
struct PartitionClass {
    std::vector<EdgeRef> edges;
    std::vector<VertexId> all_to;
    bool remainder = false;

    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

struct Partition {
    std::vector<PartitionClass> classes;

    friend bool operator==(const Partition&, const Partition&) = default;
};

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

enum class MoveKind { O, S, T, COLLAPSE, COLADD, BREAKSPLIT };

const char* to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& s);

struct MoveRecord {
    MoveKind kind = MoveKind::O;
    json params;
    std::vector<VertexId> pre;
    std::vector<VertexId> post;
    std::string input_hash;
    std::string output_hash;

    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

json to_json(const MoveRecord& r);
MoveRecord record_from_json(const json& j);

struct MoveResult {
    Graph graph;
    std::vector<MoveRecord> trace;
};

/// Replaces u by one vertex per class, named u^1..u^n in class order.
/// At most one class may be infinite and at most one may be the remainder.
MoveResult out_split(const Graph& g, const VertexId& u, const Partition& p);

/// Removes a regular, loopless, non-source vertex u, routing every path
/// x → u → y through a direct edge x → y.
MoveResult collapse(const Graph& g, const VertexId& u);

/// Deletes regular sources until none are left. No record when nothing
/// is removed.
MoveResult remove_regular_sources(const Graph& g);

/// Makes A(v0, vn) infinite. Requires A(v0, v1) = ∞ and an edge on every
/// later step.
MoveResult move_T(const Graph& g, const std::vector<VertexId>& path);

/// Column v += column u, then A(u, v) -= 1. Requires u ≠ v and A(u, v) ≥ 1.
/// Rejected when u would be left without edges.
MoveResult column_add(const Graph& g, const VertexId& u, const VertexId& v);

/// column_add(x1, x2), ..., column_add(x_{n-1}, x_n) along x0, ..., xn with
/// n ≥ 2 and distinct vertices (x0 = xn allowed).
MoveResult column_ops_along_path(const Graph& g, const std::vector<VertexId>& path);

/// Out-split of an infinite emitter into the part with infinitely many
/// parallel edges (u^1) and the finite rest (u^2). Unchanged, with no
/// record, when the finite rest is empty.
MoveResult split_breaking(const Graph& g, const VertexId& u);

/// Re-applies a recorded move. Throws InternalError if either hash differs.
Graph replay(const MoveRecord& r, const Graph& input);

} // namespace graphck

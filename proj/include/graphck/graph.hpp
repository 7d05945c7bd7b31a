#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphck/extnat.hpp"

namespace graphck {

using VertexId = std::string;

/// Membership flags indexed by vertex position in a Graph.
using VertexSet = std::vector<bool>;

/// One individual edge: the `index`-th of the parallel edges src → dst.
struct EdgeRef {
    VertexId src;
    VertexId dst;
    std::uint64_t index = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Directed graph with finitely many vertices and edge multiplicities in
/// N ∪ {∞}, stored as a dense adjacency matrix A(u,v) = #edges u → v.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Validates that names are unique and the matrix is square of the
    /// right size; throws ValidationError otherwise.
    Graph(std::vector<VertexId> vertices, std::vector<std::vector<ExtNat>> adjacency);
    Graph(std::vector<VertexId> vertices, std::vector<ExtNat> flat);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::vector<VertexId>& vertices() const { return names_; }
    const VertexId& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> find(const VertexId& v) const;
    /// Throws NotFound for unknown vertices.
    std::size_t index_of(const VertexId& v) const;

    ExtNat at(std::size_t u, std::size_t v) const { return adj_[u * names_.size() + v]; }
    ExtNat operator()(const VertexId& u, const VertexId& v) const { return at(index_of(u), index_of(v)); }

    /// Row sum of A(u, ·).
    ExtNat out_degree(std::size_t u) const;

    bool is_sink(std::size_t u) const { return out_degree(u).is_zero(); }
    bool is_infinite_emitter(std::size_t u) const { return out_degree(u).is_inf(); }
    bool is_regular(std::size_t u) const;
    bool is_source(std::size_t u) const;

    /// Whether `e` names an existing edge of this graph.
    bool contains(const EdgeRef& e) const;

    const std::vector<ExtNat>& flat() const { return adj_; }
    std::vector<std::vector<ExtNat>> matrix() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void validate() const;

    std::vector<VertexId> names_;
    std::vector<ExtNat> adj_;
};

Graph make_graph(std::vector<VertexId> vertices, std::vector<std::vector<ExtNat>> adjacency);

enum class VertexKind { regular, sink, infinite_emitter };

const char* to_string(VertexKind kind);

struct VertexClass {
    VertexKind kind = VertexKind::sink;
    bool is_source = false;
    bool supports_loop = false;
    ExtNat loop_count;

    friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

VertexClass vertex_class(const Graph& g, std::size_t v);
VertexClass vertex_class(const Graph& g, const VertexId& v);

/// Reflexive reachability: entry [v][w] is true iff there is a path
/// (possibly of length zero) from v to w.
std::vector<std::vector<bool>> reachability(const Graph& g);

/// v ≥ w: a path of length zero or more from v to w.
bool reaches(const Graph& g, std::size_t v, std::size_t w);
bool reaches(const Graph& g, const VertexId& v, const VertexId& w);

/// v ⪰ w: a path of nonzero length from v to w.
bool dominates(const Graph& g, std::size_t v, std::size_t w);
bool dominates(const Graph& g, const VertexId& v, const VertexId& w);

/// Strict-dominance matrix: entry [v][w] is dominates(g, v, w).
std::vector<std::vector<bool>> dominance(const Graph& g);

/// A shortest path v = x0, x1, ..., xn = w with n ≥ 1 through distinct
/// vertices (except that x0 = xn when v == w). Empty if none exists.
std::vector<std::size_t> shortest_path(const Graph& g, std::size_t v, std::size_t w);

VertexSet make_set(const Graph& g, const std::vector<VertexId>& members);
std::vector<VertexId> members(const Graph& g, const VertexSet& s);

bool is_hereditary(const Graph& g, const VertexSet& s);
bool is_saturated(const Graph& g, const VertexSet& s);

VertexSet hereditary_closure(const Graph& g, const VertexSet& s);
/// Smallest saturated superset of `h`.
VertexSet saturate(const Graph& g, const VertexSet& h);

enum class CycleCount { zero, one, two_or_more };

/// Number of distinct simple cycles based at v, i.e. edge paths
/// e1...en from v back to v that do not return to v before the last edge.
/// Parallel edges count separately; the count is truncated at two.
CycleCount simple_cycle_count_at(const Graph& g, std::size_t v);
CycleCount simple_cycle_count_at(const Graph& g, const VertexId& v);

/// Every vertex is the base of either no cycle or at least two simple ones.
bool condition_K(const Graph& g);

/// Structural equality up to a relabelling of vertices. Backtracking search,
/// intended for the small graphs produced in tests and traces.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Graph on the given vertices (in the order of `keep`), with the induced
/// sub-matrix.
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep);

/// A vertex name derived from `base` that does not occur in `taken`.
VertexId fresh_name(const std::vector<VertexId>& taken, const VertexId& base);

} // namespace graphck

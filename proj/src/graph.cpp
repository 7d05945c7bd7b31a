#include "graphck/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "graphck/errors.hpp"

namespace graphck {

Graph::Graph(std::vector<VertexId> vertices, std::vector<std::vector<ExtNat>> adjacency)
    : names_(std::move(vertices)) {
    if (adjacency.size() != names_.size()) {
        throw ValidationError("adjacency has " + std::to_string(adjacency.size()) + " rows for " +
                              std::to_string(names_.size()) + " vertices");
    }
    adj_.reserve(names_.size() * names_.size());
    for (const auto& row : adjacency) {
        if (row.size() != names_.size()) {
            throw ValidationError("adjacency matrix is not square");
        }
        adj_.insert(adj_.end(), row.begin(), row.end());
    }
    validate();
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<ExtNat> flat)
    : names_(std::move(vertices)), adj_(std::move(flat)) {
    if (adj_.size() != names_.size() * names_.size()) {
        throw ValidationError("adjacency size does not match vertex count");
    }
    validate();
}

void Graph::validate() const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw ValidationError("duplicate vertex '" + names_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> Graph::find(const VertexId& v) const {
    auto it = std::find(names_.begin(), names_.end(), v);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::index_of(const VertexId& v) const {
    auto i = find(v);
    if (!i) {
        throw NotFound("vertex '" + v + "'");
    }
    return *i;
}

ExtNat Graph::out_degree(std::size_t u) const {
    ExtNat total;
    for (std::size_t v = 0; v < size(); ++v) {
        total += at(u, v);
    }
    return total;
}

bool Graph::is_regular(std::size_t u) const {
    auto d = out_degree(u);
    return d.positive() && d.is_finite();
}

bool Graph::is_source(std::size_t u) const {
    for (std::size_t x = 0; x < size(); ++x) {
        if (at(x, u).positive()) {
            return false;
        }
    }
    return true;
}

bool Graph::contains(const EdgeRef& e) const {
    auto s = find(e.src);
    auto d = find(e.dst);
    if (!s || !d) {
        return false;
    }
    ExtNat m = at(*s, *d);
    return m.is_inf() || e.index < m.value();
}

std::vector<std::vector<ExtNat>> Graph::matrix() const {
    std::vector<std::vector<ExtNat>> rows(size());
    for (std::size_t u = 0; u < size(); ++u) {
        rows[u].assign(adj_.begin() + static_cast<std::ptrdiff_t>(u * size()),
                       adj_.begin() + static_cast<std::ptrdiff_t>((u + 1) * size()));
    }
    return rows;
}

Graph make_graph(std::vector<VertexId> vertices, std::vector<std::vector<ExtNat>> adjacency) {
    return Graph(std::move(vertices), std::move(adjacency));
}

const char* to_string(VertexKind kind) {
    switch (kind) {
    case VertexKind::regular: return "regular";
    case VertexKind::sink: return "sink";
    case VertexKind::infinite_emitter: return "infinite-emitter";
    }
    return "?";
}

VertexClass vertex_class(const Graph& g, std::size_t v) {
    VertexClass c;
    ExtNat d = g.out_degree(v);
    if (d.is_zero()) {
        c.kind = VertexKind::sink;
    } else if (d.is_inf()) {
        c.kind = VertexKind::infinite_emitter;
    } else {
        c.kind = VertexKind::regular;
    }
    c.is_source = g.is_source(v);
    c.loop_count = g.at(v, v);
    c.supports_loop = c.loop_count.positive();
    return c;
}

VertexClass vertex_class(const Graph& g, const VertexId& v) {
    return vertex_class(g, g.index_of(v));
}

namespace {

VertexSet forward_closure(const Graph& g, VertexSet seen) {
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) {
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (!seen[w] && g.at(u, w).positive()) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

std::vector<std::vector<bool>> reachability(const Graph& g) {
    std::vector<std::vector<bool>> reach(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        VertexSet start(g.size(), false);
        start[v] = true;
        reach[v] = forward_closure(g, std::move(start));
    }
    return reach;
}

bool reaches(const Graph& g, std::size_t v, std::size_t w) {
    VertexSet start(g.size(), false);
    start[v] = true;
    return forward_closure(g, std::move(start))[w];
}

bool reaches(const Graph& g, const VertexId& v, const VertexId& w) {
    return reaches(g, g.index_of(v), g.index_of(w));
}

bool dominates(const Graph& g, std::size_t v, std::size_t w) {
    VertexSet start(g.size(), false);
    bool any = false;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g.at(v, u).positive()) {
            start[u] = true;
            any = true;
        }
    }
    return any && forward_closure(g, std::move(start))[w];
}

bool dominates(const Graph& g, const VertexId& v, const VertexId& w) {
    return dominates(g, g.index_of(v), g.index_of(w));
}

std::vector<std::vector<bool>> dominance(const Graph& g) {
    auto reach = reachability(g);
    std::vector<std::vector<bool>> dom(g.size(), std::vector<bool>(g.size(), false));
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (!g.at(v, u).positive()) {
                continue;
            }
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (reach[u][w]) {
                    dom[v][w] = true;
                }
            }
        }
    }
    return dom;
}

std::vector<std::size_t> shortest_path(const Graph& g, std::size_t v, std::size_t w) {
    const std::size_t n = g.size();
    if (g.at(v, w).positive()) {
        return {v, w};
    }
    // Breadth-first search over vertices other than v.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, none);
    std::vector<bool> seen(n, false);
    seen[v] = true;
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (x != v && g.at(v, x).positive()) {
            seen[x] = true;
            parent[x] = v;
            queue.push_back(x);
        }
    }
    auto unwind = [&](std::size_t last) {
        std::vector<std::size_t> path;
        for (std::size_t x = last; x != v; x = parent[x]) {
            path.push_back(x);
        }
        path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        if (x == w) {
            return unwind(x);
        }
        if (w == v && g.at(x, v).positive()) {
            auto path = unwind(x);
            path.push_back(v);
            return path;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (!seen[y] && g.at(x, y).positive()) {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    return {};
}

VertexSet make_set(const Graph& g, const std::vector<VertexId>& members) {
    VertexSet s(g.size(), false);
    for (const auto& m : members) {
        s[g.index_of(m)] = true;
    }
    return s;
}

std::vector<VertexId> members(const Graph& g, const VertexSet& s) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (s[i]) {
            out.push_back(g.name(i));
        }
    }
    return out;
}

bool is_hereditary(const Graph& g, const VertexSet& s) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!s[v]) {
            continue;
        }
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (!s[w] && g.at(v, w).positive()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool emits_only_into(const Graph& g, std::size_t v, const VertexSet& s) {
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (!s[w] && g.at(v, w).positive()) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_saturated(const Graph& g, const VertexSet& s) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!s[v] && g.is_regular(v) && emits_only_into(g, v, s)) {
            return false;
        }
    }
    return true;
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& s) {
    return forward_closure(g, s);
}

VertexSet saturate(const Graph& g, const VertexSet& h) {
    VertexSet s = h;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!s[v] && g.is_regular(v) && emits_only_into(g, v, s)) {
                s[v] = true;
                changed = true;
            }
        }
    }
    return s;
}

CycleCount simple_cycle_count_at(const Graph& g, std::size_t v) {
    const std::size_t n = g.size();
    // Intermediate vertices of a first-return path lie in `mid`: reachable
    // from v and co-reachable to v without passing through v.
    VertexSet fwd(n, false);
    VertexSet bwd(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (x != v && g.at(v, x).positive()) {
            fwd[x] = true;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y = 0; y < n; ++y) {
            if (y != v && !fwd[y] && g.at(x, y).positive()) {
                fwd[y] = true;
                queue.push_back(y);
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (x != v && g.at(x, v).positive()) {
            bwd[x] = true;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y = 0; y < n; ++y) {
            if (y != v && !bwd[y] && g.at(y, x).positive()) {
                bwd[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::vector<std::size_t> mid;
    for (std::size_t x = 0; x < n; ++x) {
        if (fwd[x] && bwd[x]) {
            mid.push_back(x);
        }
    }

    // Topological order of the subgraph induced on `mid` (Kahn). A leftover
    // vertex means a cycle avoiding v, which can be traversed any number of
    // times on the way back to v.
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t x : mid) {
        for (std::size_t y : mid) {
            if (g.at(x, y).positive()) {
                ++indeg[y];
            }
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t x : mid) {
        if (indeg[x] == 0) {
            order.push_back(x);
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t y : mid) {
            if (g.at(order[i], y).positive() && --indeg[y] == 0) {
                order.push_back(y);
            }
        }
    }
    if (order.size() != mid.size()) {
        return CycleCount::two_or_more;
    }

    auto capped = [](ExtNat e) -> unsigned { return e.is_inf() ? 2U : static_cast<unsigned>(std::min<std::uint64_t>(e.value(), 2)); };
    // ways[x] = number of paths x → v through `mid`, truncated at 2.
    std::vector<unsigned> ways(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t x = *it;
        unsigned total = capped(g.at(x, v));
        for (std::size_t y : mid) {
            if (g.at(x, y).positive()) {
                total += capped(g.at(x, y)) * ways[y];
            }
        }
        ways[x] = std::min(total, 2U);
    }
    unsigned total = capped(g.at(v, v));
    for (std::size_t x : mid) {
        if (g.at(v, x).positive()) {
            total += capped(g.at(v, x)) * ways[x];
        }
    }
    if (total == 0) {
        return CycleCount::zero;
    }
    return total == 1 ? CycleCount::one : CycleCount::two_or_more;
}

CycleCount simple_cycle_count_at(const Graph& g, const VertexId& v) {
    return simple_cycle_count_at(g, g.index_of(v));
}

bool condition_K(const Graph& g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (simple_cycle_count_at(g, v) == CycleCount::one) {
            return false;
        }
    }
    return true;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<std::size_t> map;      // a-vertex -> b-vertex
    std::vector<bool> used;

    bool extend(std::size_t i) {
        if (i == a.size()) {
            return true;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || a.at(i, i) != b.at(j, j)) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                ok = a.at(i, k) == b.at(j, map[k]) && a.at(k, i) == b.at(map[k], j);
            }
            if (!ok) {
                continue;
            }
            used[j] = true;
            map[i] = j;
            if (extend(i + 1)) {
                return true;
            }
            used[j] = false;
        }
        return false;
    }
};

std::vector<std::vector<ExtNat>> sorted_rows(const Graph& g) {
    auto rows = g.matrix();
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || sorted_rows(a) != sorted_rows(b)) {
        return false;
    }
    IsoSearch search{a, b, std::vector<std::size_t>(a.size(), 0), std::vector<bool>(b.size(), false)};
    return search.extend(0);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
    std::vector<VertexId> names;
    std::vector<ExtNat> flat;
    names.reserve(keep.size());
    flat.reserve(keep.size() * keep.size());
    for (std::size_t u : keep) {
        names.push_back(g.name(u));
        for (std::size_t v : keep) {
            flat.push_back(g.at(u, v));
        }
    }
    return Graph(std::move(names), std::move(flat));
}

VertexId fresh_name(const std::vector<VertexId>& taken, const VertexId& base) {
    VertexId name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
        name += "'";
    }
    return name;
}

} // namespace graphck

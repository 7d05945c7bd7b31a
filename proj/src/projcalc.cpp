#include "graphck/projcalc.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "graphck/canonical.hpp"
#include "graphck/errors.hpp"

namespace graphck {

namespace {

using Pair = std::pair<VertexId, VertexId>;
using IndexUse = std::map<Pair, std::set<std::uint64_t>>;

void add(CoefficientSystem& c, const Term& t, std::uint64_t n) {
    if (n > 0) {
        c[t] += n;
    }
}

void add_sink(CoefficientSystem& c, const VertexId& v, std::uint64_t n) {
    add(c, make_term(v), n);
}

void require_stably_complete(const Graph& g) {
    if (!is_stably_complete(g).satisfied) {
        throw DomainError("the graph is not stably complete");
    }
}

bool has_nonempty_term(const CoefficientSystem& c, const VertexId& v) {
    for (const auto& [t, n] : c) {
        if (t.vertex == v && !t.edges.empty()) {
            return true;
        }
    }
    return false;
}

bool tail_has_nonempty(const ProjectionSequence& s, const VertexId& v) {
    return s.tail && has_nonempty_term(*s.tail, v);
}

std::set<EdgeRef> head_edges_at(const ProjectionSequence& s, const VertexId& v) {
    std::set<EdgeRef> out;
    for (const auto& c : s.head) {
        for (const auto& [t, n] : c) {
            if (t.vertex == v) {
                out.insert(t.edges.begin(), t.edges.end());
            }
        }
    }
    return out;
}

CoefficientSystem merge(const std::vector<CoefficientSystem>& systems, std::size_t count) {
    CoefficientSystem out;
    for (std::size_t k = 0; k < count; ++k) {
        for (const auto& [t, n] : systems[k]) {
            add(out, t, n);
        }
    }
    return out;
}

// Distinct labels per pair in a tail template.
std::map<Pair, std::uint64_t> tail_widths(const CoefficientSystem& tail) {
    IndexUse labels;
    for (const auto& [t, n] : tail) {
        for (const auto& e : t.edges) {
            labels[{e.src, e.dst}].insert(e.index);
        }
    }
    std::map<Pair, std::uint64_t> widths;
    for (const auto& [p, set] : labels) {
        widths[p] = set.size();
    }
    return widths;
}

IndexUse head_use(const std::vector<CoefficientSystem>& head) {
    IndexUse used;
    for (const auto& c : head) {
        for (const auto& [t, n] : c) {
            for (const auto& e : t.edges) {
                used[{e.src, e.dst}].insert(e.index);
            }
        }
    }
    return used;
}

std::uint64_t smallest_unused(const std::set<std::uint64_t>& used, std::uint64_t start, std::uint64_t step) {
    std::uint64_t i = start;
    while (used.count(i)) {
        i += step;
    }
    return i;
}

// Tail labels become base, base + 2, ... per pair, in order of occurrence;
// base is the smallest even index above every even index the head uses.
CoefficientSystem normalize_tail(const std::vector<CoefficientSystem>& head, const CoefficientSystem& tail) {
    IndexUse used = head_use(head);
    std::map<Pair, std::uint64_t> next;
    CoefficientSystem out;
    for (const auto& [t, n] : tail) {
        std::vector<EdgeRef> edges;
        for (const auto& e : t.edges) {
            Pair p{e.src, e.dst};
            auto it = next.find(p);
            if (it == next.end()) {
                std::uint64_t base = 0;
                for (auto i : used[p]) {
                    if (i % 2 == 0) {
                        base = std::max(base, i + 2);
                    }
                }
                it = next.emplace(p, base).first;
            }
            edges.push_back(EdgeRef{e.src, e.dst, it->second});
            it->second += 2;
        }
        add(out, make_term(t.vertex, std::move(edges)), n);
    }
    return out;
}

// Counts of (y, ∅) replacing the range projections of the edges in T,
// using the regular vertex w and its loop: for each e ∈ T one copy of
// every edge of w except the loop and one edge towards r(e).
void absorb_through(const Graph& g, std::size_t w, const std::vector<EdgeRef>& T, std::uint64_t n,
                    CoefficientSystem& out) {
    for (const auto& e : T) {
        std::size_t r = g.index_of(e.dst);
        ExtNat needed = ExtNat(1) + ExtNat(r == w ? 1 : 0);
        if (g.at(w, r) < needed || g.at(w, w).is_zero()) {
            throw DomainError("'" + g.name(w) + "' has no spare edge towards '" + e.dst + "'");
        }
        for (std::size_t y = 0; y < g.size(); ++y) {
            std::uint64_t k = g.at(w, y).value() - (y == w ? 1 : 0) - (y == r ? 1 : 0);
            add_sink(out, g.name(y), n * k);
        }
    }
}

CoefficientSystem replace_with_companion(const Graph& g, const CoefficientSystem& c, const VertexId& v,
                                         std::size_t w) {
    CoefficientSystem out;
    for (const auto& [t, n] : c) {
        if (t.vertex == v && !t.edges.empty()) {
            add_sink(out, v, n);
            absorb_through(g, w, t.edges, n, out);
        } else {
            add(out, t, n);
        }
    }
    return out;
}

std::size_t infinite_emitter_index(const Graph& g, const VertexId& v) {
    std::size_t vi = g.index_of(v);
    if (!g.is_infinite_emitter(vi)) {
        throw DomainError("'" + v + "' is not an infinite emitter");
    }
    return vi;
}

bool regular_dominator_exists(const Graph& g, std::size_t v, const std::vector<std::vector<bool>>& dom) {
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (g.is_regular(w) && dom[w][v]) {
            return true;
        }
    }
    return false;
}

VertexSet closure_of(const Graph& g, const VertexSet& s) {
    return saturate(g, hereditary_closure(g, s));
}

bool covers_all(const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [](bool b) { return b; });
}

VertexSet support_of(const Graph& g, const CoefficientSystem& c, VertexSet s) {
    for (const auto& [t, n] : c) {
        s[g.index_of(t.vertex)] = true;
    }
    return s;
}

} // namespace

Term make_term(VertexId v, std::vector<EdgeRef> edges) {
    std::sort(edges.begin(), edges.end());
    return Term{std::move(v), std::move(edges)};
}

void validate(const Graph& g, const CoefficientSystem& c) {
    for (const auto& [t, n] : c) {
        if (n == 0) {
            throw ValidationError("term at '" + t.vertex + "' has multiplicity 0");
        }
        std::size_t vi = g.index_of(t.vertex);
        if (!std::is_sorted(t.edges.begin(), t.edges.end()) ||
            std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end()) {
            throw ValidationError("edge set at '" + t.vertex + "' is not sorted and duplicate-free");
        }
        if (!t.edges.empty() && !g.is_infinite_emitter(vi)) {
            throw ValidationError("nonempty edge set at '" + t.vertex + "', which is not an infinite emitter");
        }
        for (const auto& e : t.edges) {
            if (e.src != t.vertex || !g.contains(e)) {
                throw ValidationError("edge (" + e.src + "," + e.dst + "," + std::to_string(e.index) +
                                      ") is not an edge out of '" + t.vertex + "'");
            }
        }
    }
}

void validate(const Graph& g, const ProjectionSequence& s) {
    for (const auto& c : s.head) {
        validate(g, c);
    }
    if (s.tail) {
        validate(g, *s.tail);
        for (const auto& [t, n] : *s.tail) {
            for (const auto& e : t.edges) {
                if (!g(e.src, e.dst).is_inf()) {
                    throw ValidationError("tail edge " + e.src + " -> " + e.dst + " is not on an infinite pair");
                }
            }
        }
    }
}

CoefficientSystem tail_copy(const CoefficientSystem& tail, std::uint64_t r) {
    auto widths = tail_widths(tail);
    CoefficientSystem out;
    for (const auto& [t, n] : tail) {
        std::vector<EdgeRef> edges;
        for (const auto& e : t.edges) {
            edges.push_back(EdgeRef{e.src, e.dst, e.index + 2 * r * widths[{e.src, e.dst}]});
        }
        add(out, make_term(t.vertex, std::move(edges)), n);
    }
    return out;
}

std::vector<Integer> class_vector(const Graph& g, const CoefficientSystem& c) {
    std::vector<Integer> x(g.size());
    for (const auto& [t, n] : c) {
        x[g.index_of(t.vertex)] += n;
        for (const auto& e : t.edges) {
            x[g.index_of(e.dst)] -= n;
        }
    }
    return x;
}

K0Class k0_class_of(const Graph& g, const CoefficientSystem& c) {
    return k0_reduce(g, class_vector(g, c));
}

CoefficientSystem total_head(const ProjectionSequence& s) {
    return merge(s.head, s.head.size());
}

VertexSet support(const Graph& g, const ProjectionSequence& s) {
    VertexSet out(g.size(), false);
    for (const auto& c : s.head) {
        out = support_of(g, c, std::move(out));
    }
    if (s.tail) {
        out = support_of(g, *s.tail, std::move(out));
    }
    return out;
}

bool is_full(const Graph& g, const ProjectionSequence& s) {
    require_stably_complete(g);
    return covers_all(closure_of(g, support(g, s)));
}

bool is_partitioned(const Graph& g, const ProjectionSequence& s) {
    std::set<EdgeRef> head;
    for (const auto& c : s.head) {
        for (const auto& [t, n] : c) {
            for (const auto& e : t.edges) {
                if (!head.insert(e).second) {
                    return false;
                }
            }
        }
    }
    if (!s.tail) {
        return true;
    }
    // Labels on one pair must be distinct modulo 2m so that repetitions
    // never meet, and must not run into a head edge.
    std::map<Pair, std::vector<std::uint64_t>> labels;
    for (const auto& [t, n] : *s.tail) {
        for (const auto& e : t.edges) {
            if (!g(e.src, e.dst).is_inf()) {
                return false;
            }
            labels[{e.src, e.dst}].push_back(e.index);
        }
    }
    for (const auto& [p, ls] : labels) {
        const std::uint64_t period = 2 * ls.size();
        std::set<std::uint64_t> residues;
        for (auto l : ls) {
            if (!residues.insert(l % period).second) {
                return false;
            }
        }
        // Infinitely many indices stay unused when some residue class is free.
        if (residues.size() >= period) {
            return false;
        }
        for (const auto& e : head) {
            if (e.src != p.first || e.dst != p.second) {
                continue;
            }
            for (auto l : ls) {
                if (e.index >= l && (e.index - l) % period == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

ProjectionSequence make_partitioned(const Graph& g, const ProjectionSequence& s) {
    validate(g, s);
    IndexUse used;
    ProjectionSequence out;
    for (const auto& c : s.head) {
        CoefficientSystem nc;
        for (const auto& [t, n] : c) {
            std::vector<EdgeRef> edges;
            for (const auto& e : t.edges) {
                auto& u = used[{e.src, e.dst}];
                ExtNat a = g(e.src, e.dst);
                std::uint64_t i = e.index;
                if (a.is_inf()) {
                    if (i % 2 != 0 || u.count(i)) {
                        i = smallest_unused(u, 0, 2);
                    }
                } else if (u.count(i)) {
                    i = smallest_unused(u, 0, 1);
                    if (i >= a.value()) {
                        throw DomainError("not enough edges " + e.src + " -> " + e.dst + " to separate the terms");
                    }
                }
                u.insert(i);
                edges.push_back(EdgeRef{e.src, e.dst, i});
            }
            add(nc, make_term(t.vertex, std::move(edges)), n);
        }
        out.head.push_back(std::move(nc));
    }
    if (s.tail) {
        out.tail = normalize_tail(out.head, *s.tail);
    }
    return out;
}

ProjectionSequence fullify(const Graph& g, const ProjectionSequence& s) {
    validate(g, s);
    if (!is_full(g, s)) {
        throw DomainError("the sequence is not full");
    }
    if (covers_all(support(g, s))) {
        return s;
    }
    ProjectionSequence work = s;
    auto prefix_full = [&](std::size_t count) {
        VertexSet sup(g.size(), false);
        for (std::size_t k = 0; k < count; ++k) {
            sup = support_of(g, work.head[k], std::move(sup));
        }
        return covers_all(closure_of(g, sup));
    };
    if (!prefix_full(work.head.size())) {
        // Only the tail completes the support: move one repetition into the head.
        work.head.push_back(tail_copy(*work.tail, 0));
        work.tail = tail_copy(*work.tail, 1);
    }
    std::size_t count = 1;
    while (!prefix_full(count)) {
        ++count;
    }
    CoefficientSystem first = merge(work.head, count);

    const std::size_t n = g.size();
    VertexSet covered = support_of(g, first, VertexSet(n, false));
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> step;  // (w, v)
        for (std::size_t v = 0; v < n && !step; ++v) {
            if (covered[v]) {
                continue;
            }
            for (std::size_t w = 0; w < n; ++w) {
                if (covered[w] && g.at(w, v).positive()) {
                    step = std::make_pair(w, v);
                    break;
                }
            }
        }
        if (!step) {
            break;
        }
        const auto [w, v] = *step;
        if (g.is_regular(w)) {
            add_sink(first, g.name(v), 1);
            for (std::size_t y = 0; y < n; ++y) {
                std::uint64_t k = g.at(w, y).value() - (y == v ? 1 : 0) - (y == w ? 1 : 0);
                add_sink(first, g.name(y), k);
            }
        } else {
            auto it = std::find_if(first.begin(), first.end(),
                                   [&](const auto& kv) { return kv.first.vertex == g.name(w); });
            if (it == first.end()) {
                throw InternalError("covered vertex '" + g.name(w) + "' has no term");
            }
            Term t = it->first;
            if (--it->second == 0) {
                first.erase(it);
            }
            std::set<std::uint64_t> taken;
            for (const auto& e : t.edges) {
                if (e.dst == g.name(v)) {
                    taken.insert(e.index);
                }
            }
            std::vector<EdgeRef> edges = t.edges;
            edges.push_back(EdgeRef{g.name(w), g.name(v), smallest_unused(taken, 0, 1)});
            add(first, make_term(t.vertex, std::move(edges)), 1);
            add_sink(first, g.name(v), 1);
        }
        covered[v] = true;
    }

    ProjectionSequence out;
    out.head.push_back(std::move(first));
    out.head.insert(out.head.end(), work.head.begin() + static_cast<std::ptrdiff_t>(count), work.head.end());
    out.tail = work.tail;
    return out;
}

ProjectionSequence eliminate_loop_emitter(const Graph& g, const ProjectionSequence& s, const VertexId& v) {
    require_stably_complete(g);
    validate(g, s);
    const std::size_t vi = infinite_emitter_index(g, v);
    if (g.at(vi, vi).is_zero()) {
        throw DomainError("'" + v + "' does not support a loop");
    }
    const auto dom = dominance(g);
    std::optional<std::size_t> companion;
    for (std::size_t w = 0; w < g.size() && !companion; ++w) {
        if (g.is_regular(w) && dom[vi][w] && dom[w][vi]) {
            companion = w;
        }
    }
    if (!companion) {
        throw DomainError("'" + v + "' has no regular vertex in its cycle class");
    }
    ProjectionSequence out;
    for (const auto& c : s.head) {
        out.head.push_back(replace_with_companion(g, c, v, *companion));
    }
    if (s.tail) {
        out.tail = replace_with_companion(g, *s.tail, v, *companion);
    }
    return out;
}

ProjectionSequence eliminate_dominated_emitter(const Graph& g, const ProjectionSequence& s, const VertexId& v) {
    require_stably_complete(g);
    validate(g, s);
    const std::size_t vi = infinite_emitter_index(g, v);
    if (g.at(vi, vi).positive()) {
        throw DomainError("'" + v + "' supports a loop");
    }
    const auto dom = dominance(g);
    if (!regular_dominator_exists(g, vi, dom)) {
        throw DomainError("no regular vertex dominates '" + v + "'");
    }
    if (tail_has_nonempty(s, v)) {
        throw DomainError("T_" + v + " is infinite");
    }
    std::optional<std::size_t> last;
    for (std::size_t k = 0; k < s.head.size(); ++k) {
        if (has_nonempty_term(s.head[k], v)) {
            last = k;
        }
    }
    if (!last) {
        return s;
    }
    CoefficientSystem merged = merge(s.head, *last + 1);
    std::optional<std::size_t> w;
    for (std::size_t x = 0; x < g.size() && !w; ++x) {
        if (g.is_regular(x) && dom[x][vi] && merged.count(make_term(g.name(x)))) {
            w = x;
        }
    }
    if (!w) {
        throw DomainError("no term (w, {}) with a regular w dominating '" + v + "' in the merged prefix");
    }
    ProjectionSequence out;
    out.head.push_back(replace_with_companion(g, merged, v, *w));
    out.head.insert(out.head.end(), s.head.begin() + static_cast<std::ptrdiff_t>(*last + 1), s.head.end());
    out.tail = s.tail;
    return out;
}

ProjectionSequence eliminate_undominated_emitter(const Graph& g, const ProjectionSequence& s,
                                                 const VertexId& v) {
    require_stably_complete(g);
    validate(g, s);
    const std::size_t vi = infinite_emitter_index(g, v);
    if (g.at(vi, vi).positive()) {
        throw DomainError("'" + v + "' supports a loop");
    }
    if (regular_dominator_exists(g, vi, dominance(g))) {
        throw DomainError("a regular vertex dominates '" + v + "'");
    }
    if (tail_has_nonempty(s, v)) {
        throw DomainError("T_" + v + " is infinite");
    }
    const std::set<EdgeRef> T = head_edges_at(s, v);
    if (T.empty()) {
        return s;
    }

    IndexUse head_used = head_use(s.head);
    IndexUse tail_used;
    if (s.tail) {
        for (const auto& [t, n] : *s.tail) {
            for (const auto& e : t.edges) {
                tail_used[{e.src, e.dst}].insert(e.index);
            }
        }
    }
    auto rewrite = [&](const CoefficientSystem& c, IndexUse& used) {
        CoefficientSystem out;
        for (const auto& [t, n] : c) {
            if (t.vertex == v) {
                add_sink(out, v, n);
                for (const auto& e : T) {
                    if (!std::binary_search(t.edges.begin(), t.edges.end(), e)) {
                        add_sink(out, e.dst, n);
                    }
                }
                continue;
            }
            std::vector<EdgeRef> edges = t.edges;
            for (const auto& e : t.edges) {
                if (e.dst != v) {
                    continue;
                }
                for (const auto& f : T) {
                    auto& u = used[{t.vertex, f.dst}];
                    std::uint64_t i = smallest_unused(u, 0, 1);
                    u.insert(i);
                    edges.push_back(EdgeRef{t.vertex, f.dst, i});
                }
            }
            add(out, make_term(t.vertex, std::move(edges)), n);
        }
        return out;
    };
    ProjectionSequence out;
    for (const auto& c : s.head) {
        out.head.push_back(rewrite(c, head_used));
    }
    if (s.tail) {
        out.tail = normalize_tail(out.head, rewrite(*s.tail, tail_used));
    }
    return out;
}

MultiplicityVector to_multiplicities(const Graph& g, const ProjectionSequence& s) {
    require_stably_complete(g);
    validate(g, s);
    if (!covers_all(support(g, s))) {
        throw DomainError("the sequence does not have a term at every vertex");
    }
    if (!is_partitioned(g, s)) {
        throw DomainError("the sequence is not partitioned");
    }
    const std::size_t n = g.size();
    std::vector<bool> t_empty(n, true);
    std::vector<bool> t_infinite(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        t_infinite[v] = tail_has_nonempty(s, g.name(v));
        t_empty[v] = !t_infinite[v] && head_edges_at(s, g.name(v)).empty();
    }
    const auto reach = reachability(g);
    MultiplicityVector m;
    for (std::size_t v = 0; v < n; ++v) {
        bool above_empty = true;
        bool strictly_above_empty = true;
        bool infinite_above = false;
        for (std::size_t w = 0; w < n; ++w) {
            if (!reach[w][v]) {
                continue;
            }
            above_empty = above_empty && t_empty[w];
            if (w != v) {
                strictly_above_empty = strictly_above_empty && t_empty[w];
            }
            infinite_above = infinite_above || t_infinite[w];
        }
        if (!t_empty[v] && !t_infinite[v] && !infinite_above) {
            throw DomainError("T_" + g.name(v) + " is finite and nonempty with no infinite T_w above it");
        }
        if (above_empty) {
            ExtNat sum;
            const Term bare = make_term(g.name(v));
            for (const auto& c : s.head) {
                auto it = c.find(bare);
                if (it != c.end()) {
                    sum += it->second;
                }
            }
            if (s.tail && s.tail->count(bare)) {
                sum = kInf;
            }
            m[g.name(v)] = sum;
        } else if (t_infinite[v] && strictly_above_empty) {
            m[g.name(v)] = kInf;
        } else {
            m[g.name(v)] = 1;
        }
    }
    return m;
}

MultiplicityVector normalize_multiplicities(const Graph& g, const MultiplicityVector& m) {
    if (m.size() != g.size()) {
        throw ValidationError("multiplicity vector must cover every vertex exactly once");
    }
    for (const auto& v : g.vertices()) {
        if (!m.count(v)) {
            throw ValidationError("no multiplicity for '" + v + "'");
        }
    }
    const auto reach = reachability(g);
    MultiplicityVector out = m;
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (w != v && reach[w][v] && m.at(g.name(w)).is_inf()) {
                out[g.name(v)] = 1;
            }
        }
    }
    return out;
}

MultiplicityVector corner_pipeline(const Graph& g, const ProjectionSequence& s) {
    ProjectionSequence cur = make_partitioned(g, fullify(g, s));
    const auto dom = dominance(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_infinite_emitter(v) && g.at(v, v).positive()) {
            cur = eliminate_loop_emitter(g, cur, g.name(v));
        }
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_infinite_emitter(v) && g.at(v, v).is_zero() && regular_dominator_exists(g, v, dom) &&
            !tail_has_nonempty(cur, g.name(v))) {
            cur = eliminate_dominated_emitter(g, cur, g.name(v));
        }
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_infinite_emitter(v) && g.at(v, v).is_zero() && !regular_dominator_exists(g, v, dom) &&
            !tail_has_nonempty(cur, g.name(v))) {
            cur = eliminate_undominated_emitter(g, cur, g.name(v));
        }
    }
    return to_multiplicities(g, make_partitioned(g, cur));
}

} // namespace graphck

#include "graphck/moves.hpp"

#include <algorithm>
#include <set>

#include "graphck/errors.hpp"

namespace graphck {

namespace {

MoveRecord make_record(MoveKind kind, json params, const Graph& in, const Graph& out) {
    return MoveRecord{kind, std::move(params), in.vertices(), out.vertices(), graph_hash(in), graph_hash(out)};
}

struct SplitOutcome {
    Graph graph;
    std::vector<VertexId> children;
};

SplitOutcome split_vertex(const Graph& g, const VertexId& u, const Partition& p) {
    const std::size_t n = g.size();
    const std::size_t ui = g.index_of(u);
    if (g.is_sink(ui)) {
        throw MoveError("cannot out-split the sink '" + u + "'");
    }
    if (p.classes.empty()) {
        throw MoveError("partition has no classes");
    }
    const auto remainders = std::count_if(p.classes.begin(), p.classes.end(),
                                          [](const PartitionClass& c) { return c.remainder; });
    if (remainders > 1) {
        throw MoveError("partition has more than one remainder class");
    }

    // claimed[y]: edges u → y assigned to explicit blocks.
    std::vector<ExtNat> claimed(n, ExtNat(0));
    std::vector<bool> whole(n, false);
    std::set<EdgeRef> seen;
    const std::size_t k = p.classes.size();
    std::vector<std::vector<ExtNat>> count(k, std::vector<ExtNat>(n, ExtNat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& y : p.classes[i].all_to) {
            std::size_t yi = g.index_of(y);
            if (whole[yi]) {
                throw MoveError("edges towards '" + y + "' claimed twice");
            }
            whole[yi] = true;
            count[i][yi] = g.at(ui, yi);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& e : p.classes[i].edges) {
            if (e.src != u || !g.contains(e)) {
                throw MoveError("edge (" + e.src + "," + e.dst + "," + std::to_string(e.index) +
                                ") is not an edge out of '" + u + "'");
            }
            if (!seen.insert(e).second) {
                throw MoveError("edge listed in two classes");
            }
            std::size_t yi = g.index_of(e.dst);
            if (whole[yi]) {
                throw MoveError("edges towards '" + e.dst + "' claimed twice");
            }
            count[i][yi] += 1;
            claimed[yi] += 1;
        }
    }
    for (std::size_t yi = 0; yi < n; ++yi) {
        if (whole[yi]) {
            claimed[yi] = g.at(ui, yi);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!p.classes[i].remainder) {
            continue;
        }
        for (std::size_t yi = 0; yi < n; ++yi) {
            ExtNat a = g.at(ui, yi);
            if (whole[yi]) {
                continue;
            }
            count[i][yi] = a.is_inf() ? a : a.minus(claimed[yi].value());
        }
    }
    if (remainders == 0) {
        for (std::size_t yi = 0; yi < n; ++yi) {
            if (claimed[yi] != g.at(ui, yi)) {
                throw MoveError("partition does not cover the edges from '" + u + "' to '" + g.name(yi) + "'");
            }
        }
    }
    std::size_t infinite = 0;
    for (std::size_t i = 0; i < k; ++i) {
        ExtNat total;
        for (std::size_t yi = 0; yi < n; ++yi) {
            total += count[i][yi];
        }
        if (total.is_zero()) {
            throw MoveError("partition class " + std::to_string(i + 1) + " is empty");
        }
        if (total.is_inf()) {
            ++infinite;
        }
    }
    if (infinite > 1) {
        throw MoveError("more than one infinite class");
    }

    std::vector<VertexId> taken;
    for (std::size_t x = 0; x < n; ++x) {
        if (x != ui) {
            taken.push_back(g.name(x));
        }
    }
    std::vector<VertexId> children;
    for (std::size_t i = 0; i < k; ++i) {
        children.push_back(fresh_name(taken, u + "^" + std::to_string(i + 1)));
        taken.push_back(children.back());
    }

    // Old index of each new vertex, and which class it stands for.
    std::vector<std::size_t> origin;
    std::vector<std::size_t> block;
    std::vector<VertexId> names;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == ui) {
            for (std::size_t i = 0; i < k; ++i) {
                origin.push_back(x);
                block.push_back(i);
                names.push_back(children[i]);
            }
        } else {
            origin.push_back(x);
            block.push_back(0);
            names.push_back(g.name(x));
        }
    }
    const std::size_t m = names.size();
    std::vector<ExtNat> flat(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            std::size_t x = origin[a];
            std::size_t y = origin[b];
            flat[a * m + b] = x == ui ? count[block[a]][y] : g.at(x, y);
        }
    }
    return {Graph(std::move(names), std::move(flat)), std::move(children)};
}

Graph without_vertex(const Graph& g, std::size_t drop) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (x != drop) {
            keep.push_back(x);
        }
    }
    return induced_subgraph(g, keep);
}

bool is_regular_source(const Graph& g, std::size_t x) {
    return g.is_regular(x) && g.is_source(x);
}

std::vector<VertexId> path_from_json(const json& j) {
    return j.get<std::vector<VertexId>>();
}

} // namespace

json to_json(const Partition& p) {
    json out = json::array();
    for (const auto& c : p.classes) {
        json edges = json::array();
        for (const auto& e : c.edges) {
            edges.push_back(to_json(e));
        }
        out.push_back(json{{"edges", std::move(edges)}, {"all_to", c.all_to}, {"remainder", c.remainder}});
    }
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("partition must be an array of classes");
    }
    Partition p;
    for (const auto& c : j) {
        if (!c.is_object()) {
            throw ValidationError("partition class must be an object");
        }
        PartitionClass pc;
        if (c.contains("edges")) {
            for (const auto& e : c.at("edges")) {
                pc.edges.push_back(edge_from_json(e));
            }
        }
        if (c.contains("all_to")) {
            pc.all_to = c.at("all_to").get<std::vector<VertexId>>();
        }
        pc.remainder = c.value("remainder", false);
        p.classes.push_back(std::move(pc));
    }
    return p;
}

const char* to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::O: return "O";
    case MoveKind::S: return "S";
    case MoveKind::T: return "T";
    case MoveKind::COLLAPSE: return "COLLAPSE";
    case MoveKind::COLADD: return "COLADD";
    case MoveKind::BREAKSPLIT: return "BREAKSPLIT";
    }
    return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
    for (MoveKind k : {MoveKind::O, MoveKind::S, MoveKind::T, MoveKind::COLLAPSE, MoveKind::COLADD,
                       MoveKind::BREAKSPLIT}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw ValidationError("unknown move kind '" + s + "'");
}

json to_json(const MoveRecord& r) {
    return json{{"kind", to_string(r.kind)}, {"params", r.params},     {"pre", r.pre},
                {"post", r.post},           {"input_hash", r.input_hash}, {"output_hash", r.output_hash}};
}

MoveRecord record_from_json(const json& j) {
    try {
        return MoveRecord{move_kind_from_string(j.at("kind").get<std::string>()),
                          j.at("params"),
                          j.at("pre").get<std::vector<VertexId>>(),
                          j.at("post").get<std::vector<VertexId>>(),
                          j.at("input_hash").get<std::string>(),
                          j.at("output_hash").get<std::string>()};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed move record: ") + e.what());
    }
}

MoveResult out_split(const Graph& g, const VertexId& u, const Partition& p) {
    auto split = split_vertex(g, u, p);
    json params{{"vertex", u}, {"partition", to_json(p)}, {"children", split.children}};
    MoveRecord rec = make_record(MoveKind::O, std::move(params), g, split.graph);
    return {std::move(split.graph), {std::move(rec)}};
}

MoveResult collapse(const Graph& g, const VertexId& u) {
    const std::size_t ui = g.index_of(u);
    if (!g.is_regular(ui)) {
        throw MoveError("cannot collapse '" + u + "': not a regular vertex");
    }
    if (g.at(ui, ui).positive()) {
        throw MoveError("cannot collapse '" + u + "': it supports a loop");
    }
    if (g.is_source(ui)) {
        throw MoveError("cannot collapse '" + u + "': it is a source");
    }
    const std::size_t n = g.size();
    std::vector<VertexId> names;
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < n; ++x) {
        if (x != ui) {
            keep.push_back(x);
            names.push_back(g.name(x));
        }
    }
    std::vector<ExtNat> flat;
    flat.reserve(keep.size() * keep.size());
    for (std::size_t x : keep) {
        for (std::size_t y : keep) {
            flat.push_back(g.at(x, y) + g.at(x, ui) * g.at(ui, y));
        }
    }
    Graph out(std::move(names), std::move(flat));
    MoveRecord rec = make_record(MoveKind::COLLAPSE, json{{"vertex", u}}, g, out);
    return {std::move(out), {std::move(rec)}};
}

MoveResult remove_regular_sources(const Graph& g) {
    Graph cur = g;
    std::vector<VertexId> removed;
    for (;;) {
        std::vector<std::size_t> keep;
        for (std::size_t x = 0; x < cur.size(); ++x) {
            if (is_regular_source(cur, x)) {
                removed.push_back(cur.name(x));
            } else {
                keep.push_back(x);
            }
        }
        if (keep.size() == cur.size()) {
            break;
        }
        cur = induced_subgraph(cur, keep);
    }
    if (removed.empty()) {
        return {cur, {}};
    }
    MoveRecord rec = make_record(MoveKind::S, json{{"removed", removed}}, g, cur);
    return {std::move(cur), {std::move(rec)}};
}

MoveResult move_T(const Graph& g, const std::vector<VertexId>& path) {
    if (path.size() < 2) {
        throw MoveError("move T needs a path of length at least 1");
    }
    std::vector<std::size_t> idx;
    for (const auto& v : path) {
        idx.push_back(g.index_of(v));
    }
    if (!g.at(idx[0], idx[1]).is_inf()) {
        throw MoveError("move T needs infinitely many edges on the first step " + path[0] + " -> " + path[1]);
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (!g.at(idx[i - 1], idx[i]).positive()) {
            throw MoveError("no edge " + path[i - 1] + " -> " + path[i]);
        }
    }
    std::vector<ExtNat> flat = g.flat();
    flat[idx.front() * g.size() + idx.back()] = kInf;
    Graph out(g.vertices(), std::move(flat));
    MoveRecord rec = make_record(MoveKind::T, json{{"path", path}}, g, out);
    return {std::move(out), {std::move(rec)}};
}

MoveResult column_add(const Graph& g, const VertexId& u, const VertexId& v) {
    const std::size_t ui = g.index_of(u);
    const std::size_t vi = g.index_of(v);
    if (ui == vi) {
        throw MoveError("column operation needs two distinct vertices");
    }
    if (!g.at(ui, vi).positive()) {
        throw MoveError("column operation needs an edge " + u + " -> " + v);
    }
    if (g.out_degree(ui) == ExtNat(1) && g.at(ui, ui).is_zero()) {
        throw MoveError("column operation would turn '" + u + "' into a sink");
    }
    const std::size_t n = g.size();
    std::vector<ExtNat> flat = g.flat();
    for (std::size_t x = 0; x < n; ++x) {
        ExtNat sum = g.at(x, vi) + g.at(x, ui);
        flat[x * n + vi] = x == ui ? sum.dec() : sum;
    }
    Graph out(g.vertices(), std::move(flat));
    MoveRecord rec = make_record(MoveKind::COLADD, json{{"u", u}, {"v", v}}, g, out);
    return {std::move(out), {std::move(rec)}};
}

MoveResult column_ops_along_path(const Graph& g, const std::vector<VertexId>& path) {
    if (path.size() < 3) {
        throw MoveError("column operations need a path of length at least 2");
    }
    std::vector<std::size_t> idx;
    for (const auto& v : path) {
        idx.push_back(g.index_of(v));
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            bool closing = i == 0 && j + 1 == idx.size();
            if (idx[i] == idx[j] && !closing) {
                throw MoveError("path repeats vertex '" + path[i] + "'");
            }
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (!g.at(idx[i - 1], idx[i]).positive()) {
            throw MoveError("no edge " + path[i - 1] + " -> " + path[i]);
        }
    }
    MoveResult result{g, {}};
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        auto step = column_add(result.graph, path[i], path[i + 1]);
        result.graph = std::move(step.graph);
        result.trace.push_back(std::move(step.trace.front()));
    }
    return result;
}

MoveResult split_breaking(const Graph& g, const VertexId& u) {
    const std::size_t ui = g.index_of(u);
    if (!g.is_infinite_emitter(ui)) {
        throw MoveError("'" + u + "' is not an infinite emitter");
    }
    PartitionClass infinite_part;
    bool finite_rest = false;
    for (std::size_t y = 0; y < g.size(); ++y) {
        ExtNat a = g.at(ui, y);
        if (a.is_inf()) {
            infinite_part.all_to.push_back(g.name(y));
        } else if (a.positive()) {
            finite_rest = true;
        }
    }
    if (!finite_rest) {
        return {g, {}};
    }
    PartitionClass rest;
    rest.remainder = true;
    auto split = split_vertex(g, u, Partition{{infinite_part, rest}});
    MoveRecord rec =
        make_record(MoveKind::BREAKSPLIT, json{{"vertex", u}, {"children", split.children}}, g, split.graph);
    return {std::move(split.graph), {std::move(rec)}};
}

Graph replay(const MoveRecord& r, const Graph& input) {
    if (graph_hash(input) != r.input_hash) {
        throw InternalError(std::string("replay of ") + to_string(r.kind) + ": input hash mismatch");
    }
    Graph out;
    try {
        switch (r.kind) {
        case MoveKind::O:
            out = out_split(input, r.params.at("vertex").get<VertexId>(),
                            partition_from_json(r.params.at("partition")))
                      .graph;
            break;
        case MoveKind::S: {
            out = input;
            for (const auto& v : r.params.at("removed").get<std::vector<VertexId>>()) {
                std::size_t x = out.index_of(v);
                if (!is_regular_source(out, x)) {
                    throw MoveError("'" + v + "' is not a regular source");
                }
                out = without_vertex(out, x);
            }
            break;
        }
        case MoveKind::T: out = move_T(input, path_from_json(r.params.at("path"))).graph; break;
        case MoveKind::COLLAPSE: out = collapse(input, r.params.at("vertex").get<VertexId>()).graph; break;
        case MoveKind::COLADD:
            out = column_add(input, r.params.at("u").get<VertexId>(), r.params.at("v").get<VertexId>()).graph;
            break;
        case MoveKind::BREAKSPLIT: out = split_breaking(input, r.params.at("vertex").get<VertexId>()).graph; break;
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed move parameters: ") + e.what());
    }
    if (graph_hash(out) != r.output_hash) {
        throw InternalError(std::string("replay of ") + to_string(r.kind) + ": output hash mismatch");
    }
    return out;
}

} // namespace graphck

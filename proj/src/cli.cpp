#include "graphck/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "graphck/corpus.hpp"
#include "graphck/errors.hpp"
#include "graphck/io.hpp"

namespace graphck {

namespace {

constexpr int kInvalid = 1;
constexpr int kInvariant = 2;

CanonicalizeOptions options_from_env() {
    CanonicalizeOptions o;
    if (const char* fuel = std::getenv("GRAPHCK_FUEL")) {
        try {
            o.fuel = std::stoull(fuel);
        } catch (const std::exception&) {
            throw ValidationError(std::string("GRAPHCK_FUEL must be a nonnegative integer, got '") + fuel + "'");
        }
    }
    return o;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw ValidationError("cannot write '" + path + "'");
    }
    f << text;
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

std::vector<VertexId> split_list(const std::string& s) {
    std::vector<VertexId> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Graph load_graph(const std::string& path) {
    return graph_from_json(read_json_file(path));
}

json trace_json(const std::vector<MoveRecord>& trace) {
    json t = json::array();
    for (const auto& r : trace) {
        t.push_back(to_json(r));
    }
    return t;
}

// One corpus item: a few random moves, then canonicalization, all checked
// against the K-theory oracle and by replaying every record.
std::string verify_item(std::mt19937_64& rng, std::size_t max_vertices, const CanonicalizeOptions& opts) {
    Graph g = random_graph(rng, max_vertices);
    const KTheoryPair k = k_groups(g);
    for (int step = 0; step < 3; ++step) {
        auto m = random_move(rng, g);
        if (!m) {
            break;
        }
        MoveResult r = apply(g, *m);
        Graph cur = g;
        for (const auto& rec : r.trace) {
            cur = replay(rec, cur);
        }
        if (!(cur == r.graph)) {
            return "replay of " + m->describe() + " differs";
        }
        if (k_groups(r.graph) != k) {
            return "K-theory changed by " + m->describe();
        }
        g = std::move(r.graph);
    }
    MoveResult c = canonicalize(g, opts);
    if (!is_stably_complete(c.graph).satisfied) {
        return "canonical form is not stably complete";
    }
    if (k_groups(c.graph) != k) {
        return "K-theory changed by canonicalization";
    }
    Graph cur = g;
    for (const auto& rec : c.trace) {
        cur = replay(rec, cur);
    }
    if (!(cur == c.graph)) {
        return "canonicalization trace does not replay";
    }
    return {};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph moves, canonical forms, projection calculus and K-theory for graphs with "
                 "multiplicities in N and infinity"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("-o,--out", out_path, "Write the result to this file");

    std::string graph_path;
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Vertex classes, Condition (K), stably-complete report");
    analyze->add_option("graph", graph_path, "Graph JSON")->required();

    std::string trace_path;
    auto* canon = app.add_subcommand("canonicalize", "Move a graph to a stably complete graph");
    canon->add_option("graph", graph_path, "Graph JSON")->required();
    canon->add_option("--trace", trace_path, "Write the move trace to this file");

    std::string op;
    std::string vertex;
    std::string to;
    std::string path;
    std::string partition;
    auto* move = app.add_subcommand("move", "Apply one move");
    move->add_option("graph", graph_path, "Graph JSON")->required();
    move->add_option("--op", op, "Move")
        ->required()
        ->check(CLI::IsMember(
            {"out-split", "collapse", "remove-sources", "move-t", "column-add", "column-path", "split-breaking"}));
    move->add_option("--vertex", vertex, "Vertex the move acts on (column-add: u)");
    move->add_option("--to", to, "Second vertex of column-add");
    move->add_option("--path", path, "Comma-separated vertex path");
    move->add_option("--partition", partition, "Partition JSON for out-split");
    move->add_option("--trace", trace_path, "Write the move record to this file");

    std::size_t max_vertices = 16;
    auto* ideals = app.add_subcommand("ideals", "Admissible pairs and their lattice");
    ideals->add_option("graph", graph_path, "Graph JSON")->required();
    ideals->add_option("--max-vertices", max_vertices, "Refuse larger graphs");
    add_format(ideals);

    std::string sequence_path;
    std::string multiplicities_path;
    auto* corner = app.add_subcommand("corner", "Corner graph from a projection sequence or multiplicities");
    corner->add_option("graph", graph_path, "Graph JSON")->required();
    auto* seq_opt = corner->add_option("--sequence", sequence_path, "Projection sequence JSON");
    auto* mult_opt = corner->add_option("--multiplicities", multiplicities_path, "Multiplicity JSON");
    seq_opt->excludes(mult_opt);

    std::string corner_path;
    auto* unit = app.add_subcommand("unitize", "Unitization graph of a corner graph");
    unit->add_option("corner", corner_path, "Corner graph JSON")->required();
    add_format(unit);

    auto* kth = app.add_subcommand("ktheory", "K0 and K1 via Smith normal form");
    kth->add_option("graph", graph_path, "Graph JSON")->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("graph", graph_path, "Graph JSON")->required();

    std::size_t corpus = 200;
    std::uint64_t seed = 1;
    std::size_t corpus_vertices = 6;
    auto* verify = app.add_subcommand("verify", "Random move and canonicalization invariance checks");
    verify->add_option("--corpus", corpus, "Number of random graphs");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--max-vertices", corpus_vertices, "Largest random graph");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (analyze->parsed()) {
            Graph g = load_graph(graph_path);
            json classes = json::object();
            for (const auto& v : g.vertices()) {
                classes[v] = to_json(vertex_class(g, v));
            }
            json report{{"vertices", std::move(classes)},
                        {"condition_K", condition_K(g)},
                        {"stably_complete", to_json(is_stably_complete(g))},
                        {"ktheory", to_json(k_groups(g))}};
            emit(out, out_path, dump(report));
        } else if (canon->parsed()) {
            MoveResult r = canonicalize(load_graph(graph_path), options_from_env());
            if (trace_path.empty()) {
                emit(out, out_path, dump(json{{"graph", to_json(r.graph)}, {"trace", trace_json(r.trace)}}));
            } else {
                emit(out, trace_path, dump(trace_json(r.trace)));
                emit(out, out_path, dump(to_json(r.graph)));
            }
        } else if (move->parsed()) {
            Graph g = load_graph(graph_path);
            auto need = [&](const std::string& value, const char* flag) {
                if (value.empty()) {
                    throw ValidationError("--op " + op + " needs " + flag);
                }
            };
            MoveResult r;
            if (op == "out-split") {
                need(vertex, "--vertex");
                need(partition, "--partition");
                json p;
                try {
                    p = json::parse(partition);
                } catch (const json::parse_error& e) {
                    throw ValidationError(std::string("--partition is not valid JSON: ") + e.what());
                }
                r = out_split(g, vertex, partition_from_json(p));
            } else if (op == "collapse") {
                need(vertex, "--vertex");
                r = collapse(g, vertex);
            } else if (op == "remove-sources") {
                r = remove_regular_sources(g);
            } else if (op == "move-t") {
                need(path, "--path");
                r = move_T(g, split_list(path));
            } else if (op == "column-add") {
                need(vertex, "--vertex");
                need(to, "--to");
                r = column_add(g, vertex, to);
            } else if (op == "column-path") {
                need(path, "--path");
                r = column_ops_along_path(g, split_list(path));
            } else {
                need(vertex, "--vertex");
                r = split_breaking(g, vertex);
            }
            if (!trace_path.empty()) {
                emit(out, trace_path, dump(trace_json(r.trace)));
            }
            emit(out, out_path, dump(to_json(r.graph)));
        } else if (ideals->parsed()) {
            IdealLattice l = admissible_pairs(load_graph(graph_path), max_vertices);
            emit(out, out_path, format == "dot" ? to_dot(l) : dump(to_json(l)));
        } else if (corner->parsed()) {
            Graph g = load_graph(graph_path);
            MultiplicityVector m;
            if (!sequence_path.empty()) {
                m = corner_pipeline(g, sequence_from_json(read_json_file(sequence_path)));
            } else if (!multiplicities_path.empty()) {
                m = multiplicities_from_json(read_json_file(multiplicities_path));
            } else {
                throw ValidationError("corner needs --sequence or --multiplicities");
            }
            emit(out, out_path, dump(to_json(corner_graph(g, m))));
        } else if (unit->parsed()) {
            Graph u = unitize(corner_from_json(read_json_file(corner_path)));
            emit(out, out_path, format == "dot" ? to_dot(u) : dump(to_json(u)));
        } else if (kth->parsed()) {
            emit(out, out_path, dump(to_json(k_groups(load_graph(graph_path)))));
        } else if (dot->parsed()) {
            emit(out, out_path, to_dot(load_graph(graph_path)));
        } else if (verify->parsed()) {
            const CanonicalizeOptions opts = options_from_env();
            std::mt19937_64 rng(seed);
            std::size_t passed = 0;
            std::string log;
            for (std::size_t i = 0; i < corpus; ++i) {
                std::string failure;
                try {
                    failure = verify_item(rng, corpus_vertices, opts);
                } catch (const InternalError& e) {
                    failure = e.what();
                }
                if (failure.empty()) {
                    ++passed;
                } else {
                    log += "item " + std::to_string(i) + ": " + failure + "\n";
                }
            }
            err << log;
            emit(out, out_path,
                 std::to_string(passed) + "/" + std::to_string(corpus) + " invariance checks passed\n");
            if (passed != corpus) {
                return kInvariant;
            }
        }
    } catch (const InternalError& e) {
        err << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInvalid;
    }
    return 0;
}

} // namespace graphck

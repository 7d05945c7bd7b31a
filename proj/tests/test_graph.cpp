#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "graphck/corpus.hpp"
#include "graphck/errors.hpp"
#include "graphck/graph.hpp"
#include "oracles.hpp"

using namespace graphck;
using namespace fixtures;

TEST_CASE("extended naturals") {
    CHECK(extnat_arith(kInf, 0, ArithOp::dec) == kInf);
    CHECK(extnat_arith(0, kInf, ArithOp::mul) == ExtNat(0));
    CHECK(extnat_arith(3, kInf, ArithOp::add) == kInf);
    CHECK(extnat_arith(2, 3, ArithOp::mul) == ExtNat(6));
    CHECK(extnat_arith(4, 0, ArithOp::dec) == ExtNat(3));
    CHECK_THROWS_AS(extnat_arith(0, 0, ArithOp::dec), DomainError);
    CHECK_THROWS_AS(ExtNat(1ULL << 63) * ExtNat(4), DomainError);
    CHECK(ExtNat(7) < kInf);
    CHECK(kInf.to_string() == "inf");
    CHECK_THROWS_AS((void)kInf.value(), DomainError);
    CHECK(kInf.minus(5) == kInf);
}

TEST_CASE("make_graph validates shape and names") {
    CHECK(G1().size() == 1);
    CHECK(G3()("a", "b") == ExtNat(1));
    CHECK_THROWS_AS(make_graph({"a"}, {{2}, {0}}), ValidationError);
    CHECK_THROWS_AS(make_graph({"a", "a"}, {{0, 0}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{0}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS((void)G3().index_of("z"), NotFound);
}

TEST_CASE("vertex classes") {
    auto b = vertex_class(G3(), "b");
    CHECK(b.kind == VertexKind::sink);
    CHECK_FALSE(b.is_source);
    CHECK_FALSE(b.supports_loop);

    auto a = vertex_class(G1(), "a");
    CHECK(a.kind == VertexKind::regular);
    CHECK_FALSE(a.is_source);
    CHECK(a.supports_loop);
    CHECK(a.loop_count == ExtNat(2));

    auto v = vertex_class(G5(), "v");
    CHECK(v.kind == VertexKind::infinite_emitter);
    CHECK(v.is_source);
    CHECK_FALSE(v.supports_loop);

    CHECK_THROWS_AS(vertex_class(G3(), "q"), NotFound);
}

TEST_CASE("dominance and reachability") {
    CHECK(dominates(G3(), "a", "b"));
    CHECK(dominates(G2(), "a", "a"));
    CHECK_FALSE(dominates(G3(), "b", "a"));
    CHECK_FALSE(dominates(G3(), "a", "a"));
    CHECK(reaches(G3(), "a", "a"));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 6);
        auto dom = dominance(g);
        auto r = oracle::reach(g);
        for (std::size_t v = 0; v < g.size(); ++v) {
            for (std::size_t w = 0; w < g.size(); ++w) {
                CHECK(dom[v][w] == dominates(g, v, w));
                CHECK(reaches(g, v, w) == r[v][w]);
                if (v != w) {
                    CHECK(dom[v][w] == r[v][w]);
                }
            }
        }
    }
}

TEST_CASE("hereditary closure and saturation") {
    Graph g3 = G3();
    CHECK(members(g3, hereditary_closure(g3, make_set(g3, {"a"}))) == std::vector<VertexId>{"a", "b"});
    CHECK(members(g3, hereditary_closure(g3, make_set(g3, {"b"}))) == std::vector<VertexId>{"b"});
    CHECK(members(g3, hereditary_closure(g3, make_set(g3, {}))).empty());
    CHECK(members(g3, saturate(g3, make_set(g3, {"b"}))) == std::vector<VertexId>{"a", "b"});
    CHECK(members(g3, saturate(g3, make_set(g3, {}))).empty());
    Graph g5 = G5();
    CHECK(members(g5, saturate(g5, make_set(g5, {"w"}))) == std::vector<VertexId>{"w"});

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 6);
        VertexSet s(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) {
            s[k] = rng() % 3 == 0;
        }
        VertexSet h = hereditary_closure(g, s);
        CHECK(hereditary_closure(g, h) == h);
        CHECK(is_hereditary(g, h));
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK((!s[k] || h[k]));
        }
        VertexSet bigger = s;
        bigger[rng() % g.size()] = true;
        VertexSet hb = hereditary_closure(g, bigger);
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK((!h[k] || hb[k]));
        }
        VertexSet sat = saturate(g, h);
        CHECK(is_saturated(g, sat));
        CHECK(is_hereditary(g, sat));
    }
}

TEST_CASE("simple cycles") {
    CHECK(simple_cycle_count_at(G1(), "a") == CycleCount::two_or_more);
    CHECK(simple_cycle_count_at(G2(), "a") == CycleCount::one);
    CHECK(simple_cycle_count_at(G3(), "a") == CycleCount::zero);
    CHECK(condition_K(G1()));
    CHECK_FALSE(condition_K(G2()));
    CHECK(condition_K(G3()));

    // A loop at an intermediate vertex gives infinitely many first returns.
    Graph g({"v", "a"}, std::vector<std::vector<ExtNat>>{{0, 1}, {1, 1}});
    CHECK(simple_cycle_count_at(g, "v") == CycleCount::two_or_more);
    CHECK(simple_cycle_count_at(g, "a") == CycleCount::two_or_more);
    // An infinite family on a cycle.
    Graph h({"v", "a"}, std::vector<std::vector<ExtNat>>{{0, kInf}, {1, 0}});
    CHECK(simple_cycle_count_at(h, "v") == CycleCount::two_or_more);
}

TEST_CASE("cycle counts agree with path enumeration up to 5 vertices") {
    std::mt19937_64 rng(3);
    std::discrete_distribution<int> entry({50, 25, 15, 10});
    for (int i = 0; i < 3000; ++i) {
        std::size_t n = 1 + rng() % 5;
        std::vector<VertexId> names;
        for (std::size_t k = 0; k < n; ++k) {
            names.push_back("x" + std::to_string(k));
        }
        std::vector<ExtNat> flat(n * n);
        for (auto& a : flat) {
            int k = entry(rng);
            a = k == 3 ? kInf : ExtNat(static_cast<std::uint64_t>(k));
        }
        Graph g(names, flat);
        for (std::size_t v = 0; v < n; ++v) {
            CHECK(static_cast<int>(simple_cycle_count_at(g, v)) == oracle::simple_cycles(g, v));
        }
        CHECK(condition_K(g) == oracle::condition_K(g));
    }
}

TEST_CASE("shortest paths") {
    Graph chain({"a", "b", "c"}, std::vector<std::vector<ExtNat>>{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(shortest_path(chain, 0, 2) == std::vector<std::size_t>{0, 1, 2});
    CHECK(shortest_path(chain, 0, 0) == std::vector<std::size_t>{0, 1, 2, 0});
    CHECK(shortest_path(G3(), 1, 0).empty());
    CHECK(shortest_path(G2(), 0, 0) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("isomorphism") {
    Graph a({"p", "q"}, std::vector<std::vector<ExtNat>>{{0, 1}, {0, 2}});
    Graph b({"x", "y"}, std::vector<std::vector<ExtNat>>{{2, 0}, {1, 0}});
    Graph c({"x", "y"}, std::vector<std::vector<ExtNat>>{{2, 0}, {2, 0}});
    CHECK(are_isomorphic(a, b));
    CHECK_FALSE(are_isomorphic(a, c));
    CHECK(fresh_name({"u^1", "u^1'"}, "u^1") == "u^1''");
}

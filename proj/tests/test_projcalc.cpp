#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "graphck/errors.hpp"
#include "graphck/io.hpp"
#include "graphck/projcalc.hpp"

using namespace graphck;
using namespace fixtures;

namespace {

std::vector<Integer> vec(std::vector<long> xs) { return {xs.begin(), xs.end()}; }

CoefficientSystem sys(std::vector<std::pair<Term, std::uint64_t>> terms) {
    CoefficientSystem c;
    for (auto& [t, n] : terms) {
        c[t] += n;
    }
    return c;
}

ProjectionSequence one(CoefficientSystem c) { return ProjectionSequence{{std::move(c)}, std::nullopt}; }

K0Class head_class(const Graph& g, const ProjectionSequence& s) { return k0_class_of(g, total_head(s)); }

// Class of the head with the first tail repetition included, for rewrites
// that may move one repetition into the head.
K0Class head_and_first(const Graph& g, const ProjectionSequence& s) {
    CoefficientSystem c = total_head(s);
    if (s.tail) {
        for (const auto& [t, n] : tail_copy(*s.tail, 0)) {
            c[t] += n;
        }
    }
    return k0_class_of(g, c);
}

} // namespace

TEST_CASE("k0_class_of examples") {
    CHECK(k0_class_of(G1(), sys({{make_term("a"), 1}})).is_zero());
    CHECK(k0_class_of(G2(), sys({{make_term("a"), 2}})) == k0_reduce(G2(), vec({2})));
    CHECK_FALSE(k0_class_of(G2(), sys({{make_term("a"), 2}})).is_zero());
    auto c = k0_class_of(G5(), sys({{make_term("v", {{"v", "w", 0}}), 1}}));
    CHECK(c == k0_reduce(G5(), vec({1, -1})));
    CHECK(class_vector(G5(), sys({{make_term("v", {{"v", "w", 0}}), 1}})) == vec({1, -1}));
}

TEST_CASE("validation of systems and sequences") {
    CHECK_THROWS_AS(validate(G5(), sys({{make_term("w", {{"w", "w", 0}}), 1}})), ValidationError);
    CHECK_THROWS_AS(validate(G5(), sys({{make_term("v", {{"w", "w", 0}}), 1}})), ValidationError);
    CHECK_THROWS_AS(validate(G5(), sys({{make_term("q"), 1}})), NotFound);
    ProjectionSequence bad_tail{{}, sys({{make_term("v", {{"v", "v", 0}}), 1}})};
    CHECK_THROWS(validate(G5(), bad_tail));
}

TEST_CASE("is_full") {
    CHECK(is_full(G5(), one(sys({{make_term("v", {{"v", "w", 0}}), 1}}))));
    CHECK_FALSE(is_full(G5(), one(sys({{make_term("w"), 1}}))));
    CHECK(is_full(G6(), one(sys({{make_term("v"), 1}, {make_term("w"), 1}}))));
    CHECK_THROWS_AS(is_full(G3(), one(sys({{make_term("a"), 1}}))), DomainError);
}

TEST_CASE("make_partitioned") {
    ProjectionSequence s{{sys({{make_term("v", {{"v", "w", 0}}), 1}}), sys({{make_term("v", {{"v", "w", 0}}), 1}})},
                         std::nullopt};
    CHECK_FALSE(is_partitioned(G5(), s));
    auto p = make_partitioned(G5(), s);
    CHECK(p.head[0] == sys({{make_term("v", {{"v", "w", 0}}), 1}}));
    CHECK(p.head[1] == sys({{make_term("v", {{"v", "w", 2}}), 1}}));
    CHECK(is_partitioned(G5(), p));
    CHECK(make_partitioned(G5(), p) == p);

    ProjectionSequence t{{sys({{make_term("v", {{"v", "w", 0}}), 1}})}, sys({{make_term("v", {{"v", "w", 0}}), 1}})};
    auto q = make_partitioned(G5(), t);
    CHECK(is_partitioned(G5(), q));
    CHECK(q.tail == sys({{make_term("v", {{"v", "w", 2}}), 1}}));
    CHECK(tail_copy(*q.tail, 1) == sys({{make_term("v", {{"v", "w", 4}}), 1}}));
}

TEST_CASE("fullify") {
    auto f = fullify(G5(), one(sys({{make_term("v", {{"v", "w", 0}}), 1}})));
    CHECK(f == one(sys({{make_term("v", {{"v", "w", 0}, {"v", "w", 1}}), 1}, {make_term("w"), 1}})));
    auto full = one(sys({{make_term("v"), 1}, {make_term("w"), 1}}));
    CHECK(fullify(G5(), full) == full);
    CHECK_THROWS_AS(fullify(G5(), one(sys({{make_term("w"), 1}}))), DomainError);

    // A regular vertex passes the support on through its edges.
    Graph g({"a", "b"}, std::vector<std::vector<ExtNat>>{{2, 1}, {0, 1}});
    auto r = fullify(g, one(sys({{make_term("a"), 1}})));
    CHECK(support(g, r) == VertexSet{true, true});
    CHECK(head_class(g, r) == k0_class_of(g, sys({{make_term("a"), 1}})));
}

TEST_CASE("loop emitter elimination") {
    auto s = one(sys({{make_term("v", {{"v", "w", 0}}), 1}}));
    auto r = eliminate_loop_emitter(G6(), s, "v");
    CHECK(r == one(sys({{make_term("v"), 2}})));
    CHECK(head_class(G6(), r) == head_class(G6(), s));
    auto bare = one(sys({{make_term("v"), 1}}));
    CHECK(eliminate_loop_emitter(G6(), bare, "v") == bare);
    CHECK_THROWS_AS(eliminate_loop_emitter(G8(), one(sys({{make_term("v"), 1}})), "v"), DomainError);
}

TEST_CASE("dominated emitter elimination") {
    auto s = one(sys({{make_term("w"), 1}, {make_term("v", {{"v", "x", 0}}), 1}}));
    auto r = eliminate_dominated_emitter(G7(), s, "v");
    CHECK(r == one(sys({{make_term("w"), 1}, {make_term("v"), 2}})));
    CHECK(head_class(G7(), r) == head_class(G7(), s));
    auto bare = one(sys({{make_term("v"), 1}}));
    CHECK(eliminate_dominated_emitter(G7(), bare, "v") == bare);
    CHECK_THROWS_AS(eliminate_dominated_emitter(G8(), one(sys({{make_term("v", {{"v", "x", 0}}), 1}})), "v"),
                    DomainError);
    // The prefix up to the last nonempty T_v is merged.
    ProjectionSequence two{{sys({{make_term("w"), 1}}), sys({{make_term("v", {{"v", "x", 0}}), 1}}),
                            sys({{make_term("x"), 1}})},
                           std::nullopt};
    auto m = eliminate_dominated_emitter(G7(), two, "v");
    REQUIRE(m.head.size() == 2);
    CHECK(m.head[0] == sys({{make_term("w"), 1}, {make_term("v"), 2}}));
    CHECK(m.head[1] == sys({{make_term("x"), 1}}));
}

TEST_CASE("undominated emitter elimination") {
    auto s = one(sys({{make_term("v", {{"v", "x", 0}}), 1}, {make_term("u", {{"u", "v", 0}}), 1}}));
    auto r = eliminate_undominated_emitter(G8(), s, "v");
    CHECK(r == one(sys({{make_term("v"), 1}, {make_term("u", {{"u", "v", 0}, {"u", "x", 0}}), 1}})));
    CHECK(head_class(G8(), r) == head_class(G8(), s));

    auto same = one(sys({{make_term("v", {{"v", "x", 0}}), 1}}));
    CHECK(eliminate_undominated_emitter(G8(), same, "v") == one(sys({{make_term("v"), 1}})));
    CHECK_THROWS_AS(eliminate_undominated_emitter(G6(), one(sys({{make_term("v"), 1}})), "v"), DomainError);
    CHECK_THROWS_AS(eliminate_undominated_emitter(G7(), one(sys({{make_term("v"), 1}})), "v"), DomainError);

    // A second edge of T reaches the terms that do not contain it.
    Graph g({"v", "x", "y"}, std::vector<std::vector<ExtNat>>{{0, kInf, kInf}, {0, 0, 0}, {0, 0, 0}});
    auto t = ProjectionSequence{{sys({{make_term("v", {{"v", "x", 0}}), 1}, {make_term("v", {{"v", "y", 0}}), 2}})},
                                std::nullopt};
    auto e = eliminate_undominated_emitter(g, t, "v");
    CHECK(e == one(sys({{make_term("v"), 3}, {make_term("y"), 1}, {make_term("x"), 2}})));
}

TEST_CASE("undominated elimination transports classes along the automorphism") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        auto t = gen::stably_complete_with(rng, gen::EmitterKind::undominated);
        auto s = gen::random_sequence(rng, t, gen::EmitterKind::undominated);
        const Graph& g = t.g;
        auto r = eliminate_undominated_emitter(g, s, g.name(t.v));
        // χ_v ↦ χ_v + Σ_{f ∈ T_v} χ_{r(f)}, every other generator fixed.
        std::vector<Integer> x = class_vector(g, total_head(s));
        std::vector<Integer> shifted = x;
        std::set<EdgeRef> T;
        for (const auto& c : s.head) {
            for (const auto& [term, n] : c) {
                if (term.vertex == g.name(t.v)) {
                    T.insert(term.edges.begin(), term.edges.end());
                }
            }
        }
        for (const auto& f : T) {
            shifted[g.index_of(f.dst)] += x[t.v];
        }
        CHECK(head_class(g, r) == k0_reduce(g, shifted));
        for (const auto& c : r.head) {
            for (const auto& [term, n] : c) {
                CHECK((term.vertex != g.name(t.v) || term.edges.empty()));
            }
        }
        validate(g, r);
        if (x[t.v] == 0) {
            CHECK(head_class(g, r) == head_class(g, s));
        }
    }
}

TEST_CASE("loop and dominated eliminations preserve the head class") {
    std::mt19937_64 rng(37);
    for (auto kind : {gen::EmitterKind::looped, gen::EmitterKind::dominated}) {
        for (int i = 0; i < 100; ++i) {
            auto t = gen::stably_complete_with(rng, kind);
            auto s = gen::random_sequence(rng, t, kind);
            const Graph& g = t.g;
            auto r = kind == gen::EmitterKind::looped ? eliminate_loop_emitter(g, s, g.name(t.v))
                                                      : eliminate_dominated_emitter(g, s, g.name(t.v));
            CHECK(head_class(g, r) == head_class(g, s));
            validate(g, r);
            for (const auto& c : r.head) {
                for (const auto& [term, n] : c) {
                    CHECK((term.vertex != g.name(t.v) || term.edges.empty()));
                }
            }
        }
    }
}

TEST_CASE("fullify and make_partitioned on random full sequences") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto kind = static_cast<gen::EmitterKind>(rng() % 3);
        auto t = gen::stably_complete_with(rng, kind);
        auto s = gen::random_sequence(rng, t, kind);
        const Graph& g = t.g;
        if (!is_full(g, s)) {
            CHECK_THROWS_AS(fullify(g, s), DomainError);
            continue;
        }
        auto f = fullify(g, s);
        VertexSet sup = support(g, f);
        CHECK(std::all_of(sup.begin(), sup.end(), [](bool b) { return b; }));
        VertexSet first(g.size(), false);
        for (const auto& [term, n] : f.head.at(0)) {
            first[g.index_of(term.vertex)] = true;
        }
        VertexSet before = support(g, s);
        if (!std::all_of(before.begin(), before.end(), [](bool b) { return b; })) {
            CHECK(std::all_of(first.begin(), first.end(), [](bool b) { return b; }));
        } else {
            CHECK(f == s);
        }
        CHECK((head_class(g, f) == head_class(g, s) || head_class(g, f) == head_and_first(g, s)));
        auto p = make_partitioned(g, f);
        CHECK(is_partitioned(g, p));
        CHECK(head_class(g, p) == head_class(g, f));
        CHECK(is_full(g, p));
        auto m = corner_pipeline(g, s);
        for (const auto& [v, n] : m) {
            CHECK(n >= ExtNat(1));
        }
        CHECK(m.size() == g.size());
    }
}

TEST_CASE("to_multiplicities and normalization") {
    ProjectionSequence s{{sys({{make_term("w"), 1}})}, sys({{make_term("v", {{"v", "w", 0}}), 1}})};
    CHECK(to_multiplicities(G5(), s) == MultiplicityVector{{"v", kInf}, {"w", 1}});
    CHECK(to_multiplicities(G1(), one(sys({{make_term("a"), 3}}))) == MultiplicityVector{{"a", 3}});
    auto finite = one(sys({{make_term("v", {{"v", "w", 0}}), 1}, {make_term("w"), 1}}));
    CHECK_THROWS_AS(to_multiplicities(G5(), finite), DomainError);

    CHECK(normalize_multiplicities(G5(), {{"v", kInf}, {"w", 7}}) == MultiplicityVector{{"v", kInf}, {"w", 1}});
    Graph g3_loops({"v", "w"}, std::vector<std::vector<ExtNat>>{{1, 1}, {0, 1}});
    CHECK(normalize_multiplicities(g3_loops, {{"v", 3}, {"w", 2}}) == MultiplicityVector{{"v", 3}, {"w", 2}});
    Graph single({"v"}, std::vector<std::vector<ExtNat>>{{0}});
    CHECK(normalize_multiplicities(single, {{"v", kInf}}) == MultiplicityVector{{"v", kInf}});
}

TEST_CASE("corner_pipeline examples") {
    CHECK(corner_pipeline(G5(), one(sys({{make_term("v", {{"v", "w", 0}}), 1}}))) ==
          MultiplicityVector{{"v", 1}, {"w", 1}});
    CHECK(corner_pipeline(G1(), one(sys({{make_term("a"), 3}}))) == MultiplicityVector{{"a", 3}});
    auto g8 = one(sys({{make_term("v", {{"v", "x", 0}}), 1}, {make_term("u", {{"u", "v", 0}}), 1}}));
    CHECK(corner_pipeline(G8(), g8) == MultiplicityVector{{"u", 1}, {"v", 1}, {"x", 1}});
}

TEST_CASE("JSON round trips for sequences") {
    ProjectionSequence s{{sys({{make_term("w"), 2}})}, sys({{make_term("v", {{"v", "w", 0}}), 1}})};
    CHECK(sequence_from_json(to_json(s)) == s);
    auto j = json::parse(R"([{"v": "a", "T": []}])");
    CHECK(system_from_json(j) == sys({{make_term("a"), 1}}));
}
